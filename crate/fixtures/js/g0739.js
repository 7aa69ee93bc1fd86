print((JSON.stringify('abc') - [...[false, null]], [Object.keys([1, 2]), , [Infinity, /[0-9]+/g, 255]]));
for (var i2 = 0; i2 < 2; i2++) {
i2 = String(i2);
i2 = String(new Map());
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 1);
var data1 = [new Set(), (Math.max(w3, '0'), ('\n' ? w3 : w3)), (Math.sqrt(w3, /[0-9]+/g), w3)];
data1 += `t8 ${String([false, , w3])} end`;
++data1;
