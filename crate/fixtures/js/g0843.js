outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
print(255);
print('str'[~(((p, q = 'hello') => p + q)('0'))]);
;
