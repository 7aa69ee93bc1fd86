print(1e3);
;
switch ('str'.length) {
case 1e3:
Object.keys([1, 2]);
break;
case /x/i:
case /x/i:
print(2);
default:
print(NaN > /ab+c/, [[`t7 ${2} end`, new Object(), String.raw`a${'hello'}b`], , [[...['\n', '']], , [/x/i, , 'hello']]]);
}
class A5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A5(true);
}
m0(a) {
return a + this.x;
}
}
class Box extends A5 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
;
[...[Math.min(`t3 ${A5} end`, (A5, '')), Object.keys([1, 2])]];
var acc = u => {
return u;
};
;
try {
--A5;
throw new TypeError('a,b,c');
} catch (ex2) {
print(ex2);
} finally {
--Box;
}
for (var p9 in { a: 1, b: 2 }) {
if (new WeakMap()) {
try {
++p9;
} catch (err) {
print(err.message);
} finally {
Box = Box | String(Math.min(/[0-9]+/g, undefined));
}
var obj = (u, v = '') => u + v;
--acc;
} else {
{
eval("[1, 2].length");
p9 += '0';
}
}
}
eval("1 + 2");
