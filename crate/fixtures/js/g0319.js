if (((p, q = /x/i) => p + q)(new Map())) {
for (const p of 'ab') {
function run(x, arr) {
x = p.y !== new WeakMap();
eval("var ev = 3; ev * 2");
print(Object.keys({ a: 1 }), String.raw`a${[[...[p, x]], , x]}b`);
print(arguments.length);
return '\n';
}
run(1, null);
}
print(undefined);
}
print(1e3);
print(null);
var flag4 = u => {
return u;
};
