print(Object.keys([1, 2]));
print(undefined);
try {
const c = (function (u) {
return u;
})(/ab+c/);
{
switch (Array.from({ length: 2 }, (e, i) => i * 0)) {
case /[0-9]+/g:
print(new Error());
break;
case /[0-9]+/g:
case /ab+c/:
eval("[1, 2].length");
default:
print('abc');
}
}
throw new RangeError('\n');
} catch (ex) {
print(ex.message);
}
var w2 = 2;
while (w2 > 0) {
w2--;
w2++;
}
++w2;
switch (String.raw`a${((w2) ?? (w2)) ?? (new WeakMap())}b`) {
case /x/i:
print(1, [JSON.stringify((w2, w2)), , ((p, q = 'a,b,c') => p + q)([])]);
break;
case true:
case 1e3:
eval("print('e')");
default:
;
}
for (const k in [1, 2]) {
;
}
