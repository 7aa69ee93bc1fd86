{
try {
var w = 2;
while (w > 0) {
w--;
let z2 = new Map();
}
} catch (err) {
print(err.message);
}
}
if (String.raw`a${Math.min('str'[/x/i], [undefined])}b`) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
}
print(/x/i);
function f() {
;
return [1, 2, 3]["x"];
}
print(f());
var acc = (function (u) {
return u;
})(255);
acc = String.raw`a${[(acc) || (/[0-9]+/g), , `t6 ${acc} end`]}b`;
var flag = String.raw`a${String.raw`a${{ value0: acc, next1: /ab+c/ }}b`}b`;
var w9 = 1;
while (w9 > 0) {
w9--;
var w36 = 3;
while (w36 > 0) {
w36--;
w36 <<= ~(((p, q = null) => p + q)(w9));
}
}
