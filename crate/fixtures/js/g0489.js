var w8 = 1;
while (w8 > 0) {
w8--;
w8 |= `t7 ${typeof ({ length0: w8 })} end`;
}
print(new Error(3));
for (var p of [1, 2, 3]) {
p++;
}
print(Array.from({ length: 0 }, (e, i) => i * 3));
