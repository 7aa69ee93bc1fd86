print(((p, q = 1) => p + q)((JSON.stringify(Infinity) ? (function (u) {
return u;
})('hello') : new Array())));
var w4 = 0;
do {
w4 += 1;
} while (w4 < 3);
w4;
eval("1 + 2");
for (let k5 of [1, 2, 3]) {
var acc = u => {
return u;
};
}
--w4;
for (let i = 0; i < 1; i++) {
i -= [{ value0: String.raw`a${i}b`, p11: (function (u) {
return u;
})(10) }, , (Math.pow(i, i)) || (new WeakMap())];
try {
w4;
} catch (ex2) {
print(ex2.message);
}
}
;
++w4;
