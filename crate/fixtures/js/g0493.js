;
print(new WeakMap());
eval("[1, 2].length");
var w7 = 0;
do {
w7 += 1;
} while (w7 < 1);
++w7;
print(String(false | undefined) ^ ~(JSON.stringify(/ab+c/)));
for (let k = 0; k < 4; k++) {
class Box9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box9('\u0041');
}
m1(a) {
return a + this.x;
}
}
class Derived extends Box9 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
for (var p in [1, 2]) {
switch (new Map()) {
case null:
eval("1 + 2");
break;
case false:
case true:
Box9 = null;
default:
[-((function (u) {
return u;
})('\u0041')), ({ x: 1, length: 2 })[('abc', 255)]];
}
}
}
w7[Array.from({ length: 3 }, (e, i) => i * 100)];
