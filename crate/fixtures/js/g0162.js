eval("print('e')");
;
;
;
function compute3(key3, tmp) {
{
++key3;
}
print(arguments.length);
return JSON.stringify({ length0: /x/i });
}
print(compute3(/ab+c/, /[0-9]+/g));
{
for (var j2 = 0; j2 < 5; j2++) {
;
try {
j2 = j2;
} catch (err9) {
print(err9);
} finally {
j2 = String.raw`a${(j2) && (((p, q = undefined) => p + q)(j2))}b`;
}
}
;
}
;
print(/ab+c/);
for (var k9 = 0; k9 < 1; k9++) {
--k9;
switch (Object.keys([1, 2])) {
case 10:
k9 &= ([...[(2) || (/[0-9]+/g), new Array()]] ? [[1, 2, 3][k9], JSON.stringify('hello')] : Object.keys({ a: 1 }));
break;
case 'hello':
case 'hello':
const res6 = Math.floor([~(1e3), new WeakMap()], String.raw`a${String(100)}b`);
default:
k9 += (Object.keys({ a: 1 }), !(-1));
}
}
