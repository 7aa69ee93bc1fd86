print(undefined);
function h(obj) {
for (const k of 'ab') {
obj++;
}
[...['\n', new Error(1)]];
print(arguments.length);
return [((p, q = 1) => p + q)(obj < obj), , { length0: Math.sqrt('\n', 1), value1: 'str'[0], p12: ((p, q = true) => p + q)(obj) }];
}
print(h(100));
var tmp = async function () {
return await 0x10;
};
print(new Map());
Object.keys({});
if (tmp) {
tmp--;
for (var p5 of [1, 2, 3]) {
var w = 2;
while (w > 0) {
w--;
eval("[1, 2].length");
}
}
}
if (Math.abs(JSON.stringify(tmp), +(tmp.p1))) {
print((({ value0: tmp, value1: tmp }) || ({ x0: tmp, length1: tmp })) || (Object.keys({ a: 1 })), (typeof ((function (u) {
return u;
})(/ab+c/)) ? Math.sqrt((null ? tmp : tmp), h(tmp)) : Array.from({ length: 3 }, (e, i) => i * NaN)));
}
