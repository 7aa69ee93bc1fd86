;
;
var c6 = { c6, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
function g() {
eval("1 + 2");
c6 *= Array.from({ length: 1 }, (e, i) => i * 0.5);
{
print(({ p10: c6.y } ? [new Error()] : c6.x), null);
c6--;
}
return new Date(3);
}
print(g());
for (let i = 0; i < 1; i++) {
{
var w = 1;
while (w > 0) {
w--;
eval("var ev = 3; ev * 2");
}
print(`t0 ${((p, q = '') => p + q)(i)} end`);
}
print(c6);
}
c6--;
c6++;
