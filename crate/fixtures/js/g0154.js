try {
{
print(undefined);
}
print(JSON.stringify(2));
} catch (err6) {
print(err6.message);
}
print('0');
switch (new Array(1)) {
case false:
((p, q = '\u0041') => p + q)(/x/i);
break;
case "x":
case 'hello':
print(String.raw`a${(('\n', undefined), `t7 ${/[0-9]+/g} end`)}b`, Array.from({ length: 0 }, (e, i) => i * Infinity));
default:
print(((p, q = 'abc') => p + q)(Math.abs(~(2), 'hello')));
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
eval("var ev = 3; ev * 2");
