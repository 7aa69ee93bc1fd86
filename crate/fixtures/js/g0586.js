;
function wrap1() {
function g2(item) {
var key = item.length;
return item;
}
print(g2(undefined));
{
print(g2({ value0: (/ab+c/, undefined), y1: [...["x", /ab+c/]] }), void (Array.from({ length: 4 }, (e, i) => i * 100)));
;
}
if (new.target) {
print('ctor');
}
return (Array.from({ length: 2 }, (e, i) => i * NaN), (function (u) {
return u;
})(((p, q = "x") => p + q)('')));
}
print(wrap1());
var str6 = 'str'[/ab+c/];
var w2 = 0;
do {
w2 += 1;
} while (w2 < 4);
var b = u => {
return u;
};
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
