for (let i = 0; i < 2; i++) {
--i;
print(Math.abs(({ x: 1, length: 2 })[i], Array.from({ length: 2 }, (e, i) => i * 255)));
}
print(true);
let tmp = { p10: [String.raw`a${2}b`, new WeakMap()] };
try {
for (let k6 in { a: 1, b: 2 }) {
var c = function* () {
yield false;
yield* [1, 2];
};
}
tmp--;
} catch (ex2) {
print(ex2.message);
}
if ((function (u) {
return u;
})(JSON.stringify(JSON.stringify('abc')))) {
tmp--;
eval("var ev = 3; ev * 2");
++tmp;
} else {
if (new Error()) {
tmp++;
for (let k1 = 0; k1 < 3; k1++) {
([...[(tmp, '0'), tmp]]) ?? ((function (u) {
return u;
})(k1));
k1--;
}
{
;
}
}
}
print([1, 2, 3].p1);
print([...['abc', +(Array.from({ length: 2 }, (e, i) => i * 3))]]);
try {
for (var j = 0; j < 3; j++) {
print(+(String.raw`a${''}b`), ({ x: 1, length: 2 })[String.raw`a${tmp.x}b`]);
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break;
}
}
}
} catch (err9) {
print(err9);
}
print(tmp[tmp]);
