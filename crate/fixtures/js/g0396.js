print(/[0-9]+/g);
var tmp = async function () {
return await null;
};
for (var i4 = 0; i4 < 1; i4++) {
var item = `t5 ${Array.from({ length: 0 }, (e, i) => i * Infinity)} end`;
var w = 1;
while (w > 0) {
w--;
const flag7 = [1, 2, 3].length;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
