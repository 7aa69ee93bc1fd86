;
print(new Date());
for (const k0 in { a: 1, b: 2 }) {
if (String(Object.keys({ a: 1 }) >> (k0) && (k0))) {
if (k0) {
;
}
{
;
new Object();
}
}
}
print(/ab+c/);
;
for (var p in [1, 2]) {
var { y: a3 = null, ...rest } = { x: 1 };
}
eval("1 + 2");
