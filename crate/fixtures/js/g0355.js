;
for (var k9 in [1, 2]) {
var w1 = 0;
do {
w1 += 1;
} while (w1 < 2);
}
function compute(str5, n7) {
({ p00: String.raw`a${(function (u) {
return u;
})(3)}b`, prop1: /x/i, next2: null });
if (new.target) {
print('ctor');
}
print(arguments.length);
return ((p, q = 'abc') => p + q)(n7.length);
}
print(compute(/ab+c/, null));
for (const k of []) {
class C7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C7(true);
}
m2(a) {
return a + this.x;
}
}
print(C7.make().value);
}
print({ length0: { x0: typeof ('\u0041'), x1: [/ab+c/, '0'], prop2: ('\u0041' ? true : '') } }, `t7 ${JSON.stringify(compute(255))} end`);
false;
print(true - JSON.stringify({ p00: undefined }), Math.min(Object.keys([1, 2]), Array.from({ length: 1 }, (e, i) => i * 100)));
;
var res6 = Math.max(undefined, JSON.stringify(String(undefined)));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
((p, q = /ab+c/) => p + q)(res6) > res6;
