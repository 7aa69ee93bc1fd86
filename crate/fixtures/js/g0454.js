print(/ab+c/);
print(undefined);
;
try {
;
try {
;
const count = ((p, q = 0x10) => p + q)([...[new Map(), Math.max(/ab+c/, false)]]);
} catch (e6) {
print(e6);
}
} catch (e1) {
print(e1);
}
function make3() {
if (new WeakMap()) {
print(String.raw`a${(Math.min(/[0-9]+/g, /ab+c/)) ?? ((/x/i, /x/i))}b`);
}
class A7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A7(1e3);
}
m0(a) {
return a + this.x;
}
}
print(A7.make().value);
if (new.target) {
print('ctor');
}
print(arguments.length);
return String('');
}
print(make3());
print(((p, q = 0) => p + q)((-(0x10)) ?? ([1, 2, 3][null])));
switch ({ p10: Object.keys({ a: 1 }) }) {
case 0:
let acc = { y0: (make3(1e3, /x/i), [...[3, false]]), prop1: new Array() };
break;
case 0.5:
case 100:
print((Object.keys({ a: 1 })) ?? ("x"));
default:
let y = `t5 ${new Set()} end`;
}
for (var j5 = 0; j5 < 2; j5++) {
--j5;
print(new Array(), [new Map(), , j5]);
}
const a6 = new Array(3);
