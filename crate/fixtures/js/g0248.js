if ((((p, q = false) => p + q)(-(true))) && ([])) {
try {
eval("[1, 2].length");
;
} catch (err0) {
print(err0);
} finally {
if (Object.keys({})) {
eval("var ev = 3; ev * 2");
} else {
print(Array.from({ length: 4 }, (e, i) => i * 2));
}
}
} else {
try {
eval("[1, 2].length");
} catch (err1) {
print(err1);
}
}
;
;
const x = null;
