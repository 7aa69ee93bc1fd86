print(10);
var tmp = new Map();
tmp = tmp[(tmp[tmp] ? ['a,b,c', , tmp] : tmp)];
tmp += [...[Array.from({ length: 3 }, (e, i) => i * 10), +(('\n' ? 'a,b,c' : ''))]];
var w2 = 0;
do {
w2 += 1;
} while (w2 < 1);
print(/ab+c/, [JSON.stringify((function (u) {
return u;
})(tmp)), , ((p, q = /[0-9]+/g) => p + q)(tmp)]);
function g(x3, res1) {
;
return [!(tmp[x3]), , new Set()];
}
print(g(/ab+c/, 0));
{
var a = Object.keys({});
}
for (const k in { a: 1, b: 2 }) {
function helper() {
let flag9 = String.raw`a${(function (u) {
return u;
})(g(/x/i))}b`;
return Object.keys({});
}
print(helper());
}
w2 = Math.abs((function (u) {
return u;
})(/x/i), { prop0: /[0-9]+/g }) % w2.length;
