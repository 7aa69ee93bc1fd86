print(String(JSON.stringify(`t8 ${0.5} end`)), new Set());
var flag5 = function* () {
yield '';
yield* [1, 2];
};
flag5 = ([[1, 2, 3].prop, , Array.from({ length: 2 }, (e, i) => i * 255)] ? (flag5) && (NaN) << new Map() : String.raw`a${{ y0: /x/i, y1: flag5, value2: '\n' }}b`);
switch (void ([0.5, , String.raw`a${NaN}b`])) {
case false:
const str = ([1, 2, 3][/ab+c/]) ?? ([true, flag5, flag5]) % Array.from({ length: 4 }, (e, i) => i * 2);
break;
case /[0-9]+/g:
case /[0-9]+/g:
flag5 = Object.keys({});
default:
String.raw`a${Object.keys([1, 2])}b`;
}
eval("var ev = 3; ev * 2");
