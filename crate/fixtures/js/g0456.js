;
;
JSON.stringify(String.raw`a${JSON.stringify(/[0-9]+/g)}b`);
var w3 = 0;
do {
w3 += 1;
} while (w3 < 4);
w3 += w3;
;
Math.abs((JSON.stringify(/x/i) ? Object.keys({}) : w3 - '\u0041'), (w3 ? undefined >> 'a,b,c' : `t1 ${w3} end`));
++w3;
var c = '0';
{
switch (JSON.stringify(w3[w3[NaN]])) {
case /x/i:
class Derived0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived0(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
class Derived2 extends Derived0 {
constructor() {
super("x");
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived2().value);
break;
case undefined:
case '':
var x = new Set();
default:
print(Derived0);
}
w3 = 0.5;
}
