print('');
eval("[1, 2].length");
eval("1 + 2");
var w8 = 0;
do {
w8 += 1;
} while (w8 < 3);
for (let j = 0; j < 1; j++) {
print(`t4 ${{ y0: /[0-9]+/g, value1: w8[undefined] }} end`);
print(Object.keys({}));
}
eval("[1, 2].length");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
print(w8[(`t2 ${null} end`) && (w8)]);
