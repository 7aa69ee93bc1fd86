print(new Map());
var w = 0;
do {
w += 1;
} while (w < 4);
for (let i = 0; i < 2; i++) {
eval("[1, 2].length");
w *= Object.keys({ a: 1 });
}
++w;
w = { next0: void (0.5), p01: new WeakMap() };
print('0');
var w9 = 0;
do {
w9 += 1;
} while (w9 < 4);
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(1);
}
m0(a) {
return a + this.x;
}
}
print(Derived.make().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
var count = JSON.stringify(`t2 ${Derived} end`);
(String(('\u0041') ?? (/[0-9]+/g))) && (count[new Array()]);
