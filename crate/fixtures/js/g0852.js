print(String(new Object()), JSON.stringify((function (u) {
return u;
})(new Array(1))));
eval("1 + 2");
function f7(data) {
var x8 = new Map();
x8 = Object.keys({});
print(arguments.length);
return data;
}
print(f7(1e3));
print([+(/[0-9]+/g), , ({ x: 1, length: 2 })[/[0-9]+/g]] >> 'str'[('hello') ?? ("x")], [(function (u) {
return u;
})((function (u) {
return u;
})(Infinity)), , [...[false, JSON.stringify(0x10)]]]);
print(/[0-9]+/g);
if ((function (u) {
return u;
})(Math.max(({ x: 1, length: 2 }).x, Object.keys([1, 2])))) {
({ value0: ({ x: 1, length: 2 })[new Set()] });
print(/ab+c/);
}
print([/[0-9]+/g, String(String.raw`a${0}b`), 'str'.y]);
var w = 0;
do {
w += 1;
} while (w < 3);
if (f7()) {
w;
const z = w.value;
}
