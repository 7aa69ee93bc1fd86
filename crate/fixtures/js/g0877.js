for (var k = 0; k < 3; k++) {
k = { p10: { y0: { prop0: k, p01: k, y2: k } }, y1: k };
const tmp5 = ((p, q = undefined) => p + q)(2);
}
{
{
for (const p17 in { a: 1, b: 2 }) {
;
}
}
const c6 = [...[~(new Date()), [] | String('\u0041')]];
}
for (let p4 in { a: 1, b: 2 }) {
eval("1 + 2");
}
;
{
if ((/x/i) ?? (`t8 ${JSON.stringify('a,b,c')} end`)) {
;
function wrap4() {
/ab+c/;
;
let val = (~(String.raw`a${/ab+c/}b`)) || (new Array(3));
return ((0, val != val)) && (((p, q = 1e3) => p + q)(new WeakMap()));
}
print(wrap4());
var flag3 = [({ x: 1, length: 2 })[[...['abc', /ab+c/]]], , String.raw`a${'\u0041'}b`];
}
;
}
function test0(x5, n) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) break;
}
}
if (new.target) {
print('ctor');
}
return Object.keys({ a: 1 });
}
print(test0(null, /ab+c/));
;
print(((p, q = 'a,b,c') => p + q)(Object.keys({})));
print(0x10);
eval("1 + 2");
