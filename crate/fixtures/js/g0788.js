;
for (let j = 0; j < 3; j++) {
j = j;
j -= new Map();
}
var w = 0;
do {
w += 1;
} while (w < 3);
print(Object.keys({ a: 1 }));
eval("var ev = 3; ev * 2");
eval("[1, 2].length");
w = JSON.stringify(w);
print(({ x: 1, length: 2 })[`t0 ${Infinity} end`] ^ w[[]]);
var w6 = 2;
while (w6 > 0) {
w6--;
--w6;
}
