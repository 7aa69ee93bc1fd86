eval("var ev = 3; ev * 2");
var w = 0;
do {
w += 1;
} while (w < 4);
if ([(({ x: 1, length: 2 })[/ab+c/], `t2 ${w} end`), , []]) {
w++;
}
;
for (let p of []) {
;
}
w++;
if (w[Array.from({ length: 1 }, (e, i) => i * 0)]) {
var str4 = function* () {
yield '\n';
yield* [1, 2];
};
print('abc');
}
new Error(3);
if (w.p1) {
print(`t2 ${'\n'} end`, w[Math.abs(JSON.stringify('hello'), [1, 2, 3].y)]);
}
`t2 ${true} end`;
