;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
const tmp = 3;
;
for (var k9 = 0; k9 < 2; k9++) {
k9 = (function (u) {
return u;
})((tmp - tmp) || ('\u0041'));
{
for (let p in [1, 2]) {
var b = ([((p, q = /ab+c/) => p + q)(tmp), , (1 ? k9 : /[0-9]+/g)] ? JSON.stringify({ length0: tmp, y1: tmp }) : tmp[255 <= p]);
}
}
}
