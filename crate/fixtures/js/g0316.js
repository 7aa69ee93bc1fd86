print(String(/ab+c/));
print('\n', 1e3);
for (var p of []) {
p |= Array.from({ length: 4 }, (e, i) => i * 1e3);
}
;
