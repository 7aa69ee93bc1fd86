outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
try {
print(false);
throw new Error('\n');
} catch (ex8) {
print(ex8);
}
function h() {
Math.abs(Object.keys({ a: 1 }), ((p, q = '\u0041') => p + q)('str'.prop));
if (new.target) {
print('ctor');
}
return { p00: String({ length0: /ab+c/, length1: 255, prop2: '\u0041' }), y1: /[0-9]+/g };
}
print(h());
;
;
eval("var ev = 3; ev * 2");
;
{
switch ([[undefined], , { prop0: Object.keys({}), value1: { x0: /ab+c/ } }]) {
case false:
;
break;
case false:
case 'a,b,c':
;
default:
;
}
}
try {
print(10);
for (const p in { a: 1, b: 2 }) {
try {
[1, 2, 3].p0;
} catch (err1) {
print(err1.message);
}
}
throw new TypeError('abc');
} catch (e) {
print(e.message);
}
