function f(b) {
for (let p0 in { a: 1, b: 2 }) {
;
}
print(arguments.length);
return ((((p, q = '\n') => p + q)('\u0041'), ((p, q = 2) => p + q)(false))) && ((((p, q = true) => p + q)(/[0-9]+/g)) && (new Set()));
}
print(f(false));
print(((p, q = '\u0041') => p + q)((Array.from({ length: 2 }, (e, i) => i * 255) ? Math.round('a,b,c', 0.5) : 'str'.next)));
print(true);
print(0x10);
if (String(String.raw`a${255}b` === (/x/i ? true : undefined))) {
;
} else {
function helper() {
eval("print('e')");
print(true);
return null;
}
print(helper());
try {
eval("var ev = 3; ev * 2");
;
} catch (e) {
print(e.message);
}
}
