{
var b6 = { b6, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['']: 1, ...{ q: 2 } };
{
b6 = Object.keys([1, 2]);
for (const k4 of 'ab') {
++b6;
}
}
}
print(null);
print(null);
print([String.raw`a${JSON.stringify(Infinity)}b`, 'str'[((p, q = 1e3) => p + q)(null)]]);
print('a,b,c');
;
