((p, q = /ab+c/) => p + q)(((0) && (null), 1e3));
if ({ length0: `t4 ${`t5 ${undefined} end`} end` }) {
;
} else {
print("x");
print(/[0-9]+/g);
}
print(true);
;
print(-1);
eval("var ev = 3; ev * 2");
print({ x0: [[false], ((p, q = false) => p + q)(1)] }, '\n');
