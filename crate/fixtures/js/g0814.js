for (const p9 in [1, 2]) {
;
}
print(JSON.stringify(Array.from({ length: 4 }, (e, i) => i * NaN)));
print(255);
;
;
eval("var ev = 3; ev * 2");
