function wrap(str8) {
{
const item6 = new Map();
debugger;
}
print(arguments.length);
return [1, 2, 3][[true, , /x/i]] >= str8 > ~(str8);
}
print(wrap(-1));
print(/[0-9]+/g);
;
;
const tmp4 = /x/i;
;
let a0 = String.raw`a${JSON.stringify((tmp4, /ab+c/))}b`;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
a0 <<= Math.abs(+(Array.from({ length: 4 }, (e, i) => i * 10)), (function (u) {
return u;
})(tmp4) !== Object.keys([1, 2]));
{
let c = Object.keys([1, 2]);
}
