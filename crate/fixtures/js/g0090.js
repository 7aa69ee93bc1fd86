var data = function* () {
yield Infinity;
yield* [1, 2];
};
for (const p in [1, 2]) {
for (let j = 0; j < 3; j++) {
j &= data.p1;
print(String.raw`a${p.x}b`, new WeakMap());
}
}
{
print((data.length) || (String('0' >= /ab+c/)), new WeakMap());
}
print(`t2 ${((2) ?? (true) ? new Set() : ((p, q = null) => p + q)(/ab+c/))} end`);
