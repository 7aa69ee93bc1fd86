var w = 0;
do {
w += 1;
} while (w < 4);
/[0-9]+/g;
w = Object.keys([1, 2]);
for (let k in [1, 2]) {
w--;
}
w[({ x: 1, length: 2 }).value];
--w;
eval("[1, 2].length");
