print('abc');
;
for (var k = 0; k < 5; k++) {
k--;
++k;
}
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
function wrap(b9) {
;
b9 = 'str'[[...['hello', JSON.stringify(/x/i)]]];
print(`t1 ${[...[typeof (/ab+c/), { value0: b9, next1: b9 }]]} end`);
if (new.target) {
print('ctor');
}
return String(/[0-9]+/g);
}
print(wrap(NaN));
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
for (var i = 0; i < 4; i++) {
{
{
eval("[1, 2].length");
}
}
var a1 = Math.floor(`t3 ${1e3} end`, new WeakMap()) << i[i.p1];
}
;
