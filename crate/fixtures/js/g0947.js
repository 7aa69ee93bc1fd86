print(`t6 ${/[0-9]+/g} end`, Array.from({ length: 4 }, (e, i) => i * 255));
([...[/[0-9]+/g >> false, Object.keys({})]] ? (true) ?? (Math.abs(/ab+c/, 'hello')) : new Map());
var w = 0;
do {
w += 1;
} while (w < 4);
let key9 = Infinity;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
for (var k2 of []) {
var w2 = 0;
do {
w2 += 1;
} while (w2 < 2);
}
w.prop;
w = (false ? JSON.stringify({ x0: w, prop1: key9 }) : (function (u) {
return u;
})(Math.floor(key9, key9)));
w &= new Date();
class B1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B1(true);
}
m0(a) {
return a + this.x;
}
}
class C extends B1 {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
;
