;
;
;
try {
for (let j = 0; j < 4; j++) {
({ x0: [Object.keys({ a: 1 }), , new Date()] });
Object.keys([1, 2]);
}
} catch (e) {
print(e.message);
}
const a7 = String(new Map());
{
;
}
let m = [[(function (u) {
return u;
})(1e3), , new WeakMap()], , ((p, q = '\u0041') => p + q)("x") % a7.next];
if (Math.floor(new Object(), JSON.stringify((a7) && (/x/i)))) {
function test5(count6, y) {
typeof (/ab+c/);
({ length0: m });
print(`t5 ${m[new Map()]} end`);
return new Set();
}
print(test5(NaN, true));
m |= m;
a7.p1;
}
m = [m[!(m)], , [m, , /[0-9]+/g * a7]];
m += (function (u) {
return u;
})([/ab+c/ >>> m, , String.raw`a${m}b`]);
let a = Math.min((function (u) {
return u;
})([a7, , '0']), undefined);
