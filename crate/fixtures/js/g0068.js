function wrap(tmp2, item) {
print(item.next | String({ p00: item, prop1: /ab+c/ }), (new Set() ? ((p, q = null) => p + q)(tmp2) : [1, 2, 3].y));
return /x/i;
}
print(wrap(false, 2));
print(/[0-9]+/g);
for (const p in [1, 2]) {
function helper0() {
eval("var ev = 3; ev * 2");
print(arguments.length);
return new Set();
}
helper0();
}
[...['abc', { prop0: String(255), x1: ("x") && ("x") }]];
