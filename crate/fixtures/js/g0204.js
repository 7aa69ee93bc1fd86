let val4 = 2;
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9('hello');
}
m1(a) {
return a + this.x;
}
}
class Derived extends C9 {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived().value);
let y1 = /ab+c/;
++y1;
if (String([String.raw`a${y1}b`, String.raw`a${null}b`])) {
debugger;
} else {
;
print([!(val4), , C9[[C9, Derived, /x/i]]], (Infinity, (function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * 255))));
}
for (var j0 = 0; j0 < 3; j0++) {
const n1 = { p00: [new Date(), , (function (u) {
return u;
})(val4)], prop1: (function (u) {
return u;
})((y1 ? false : /x/i)), prop2: `t2 ${(function (u) {
return u;
})(y1)} end` };
if ('0') {
switch ([[], undefined, String('str'.next)]) {
case /x/i:
j0 = false;
break;
case '\n':
case 'abc':
eval("1 + 2");
default:
/[0-9]+/g;
}
}
}
