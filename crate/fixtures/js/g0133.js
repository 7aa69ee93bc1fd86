String.raw`a${(function (u) {
return u;
})(JSON.stringify(1))}b`;
print(String(Array.from({ length: 2 }, (e, i) => i * 10)), ({ x: 1, length: 2 }).p0);
new Map();
for (var p in [1, 2]) {
for (let k3 = 0; k3 < 4; k3++) {
print([Object.keys({ a: 1 }), k3.prop]);
--p;
}
}
print(([...[0.5, ((p, q = /[0-9]+/g) => p + q)(/ab+c/)]]) || (({ x: 1, length: 2 })[new WeakMap()]));
;
;
var item8 = function* () {
yield undefined;
yield* [1, 2];
};
item8++;
