print(((p, q = /ab+c/) => p + q)((({ x: 1, length: 2 }).prop ? String.raw`a${/ab+c/}b` : String('\n'))), new WeakMap());
for (const k in { a: 1, b: 2 }) {
if (k) {
Math.sqrt(null, (k ? new Object() : String('hello')));
switch (k.length) {
case /x/i:
eval("var ev = 3; ev * 2");
break;
case undefined:
case /[0-9]+/g:
;
default:
print('abc');
}
Object.keys({ a: 1 });
} else {
;
;
}
}
print(3);
try {
var [b, , ...rest0] = [/ab+c/, 2, 3];
throw new RangeError('0');
} catch (err1) {
print(err1);
}
eval("1 + 2");
