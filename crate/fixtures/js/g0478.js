print((Array.from({ length: 1 }, (e, i) => i * NaN), JSON.stringify([...['a,b,c', 3]])), 0.5);
new Array(3);
const c = Math.pow((String.raw`a${/[0-9]+/g}b`) && (Math.sqrt(255, "x")), ((p, q = 0x10) => p + q)((/ab+c/, undefined)));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
for (let p0 of 'ab') {
let acc = (function (u) {
return u;
})(Array.from({ length: 1 }, (e, i) => i * 10));
}
