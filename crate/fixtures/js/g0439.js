{
print(/x/i, [/ab+c/, , new Array()]);
}
print(0);
let n = [(new Error() ? Math.max(Infinity, 1) : (/x/i) || (1e3)), , Array.from({ length: 0 }, (e, i) => i * Infinity)];
n = String.raw`a${([null, , n], [...[n, n]])}b`;
eval("var ev = 3; ev * 2");
if (((p, q = Infinity) => p + q)('abc')) {
n = n;
print(n, `t6 ${{ p10: [1, 2, 3].value, p11: Object.keys([1, 2]), p12: new Set() }} end`);
n += n;
} else {
var res9 = u => {
return u;
};
switch (/[0-9]+/g) {
case '0':
var count8 = function* () {
yield 100;
yield* [1, 2];
};
break;
case false:
case 'hello':
count8--;
default:
print(JSON.stringify(([...[res9, 1e3]] ? "x" : `t7 ${false} end`)), new Map());
}
}
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
;
n++;
--n;
