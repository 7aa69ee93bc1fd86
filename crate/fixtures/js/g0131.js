;
switch (Array.from({ length: 4 }, (e, i) => i * 2)) {
case 100:
eval("var ev = 3; ev * 2");
break;
case 0x10:
case '\n':
eval("print('e')");
default:
print([...[({ value0: 10, value1: 255, y2: 'hello' } ? '' : (-1 ? '' : false)), (Object.keys([1, 2])) && ((/x/i) || (''))]]);
}
;
switch (((function (u) {
return u;
})(!(3)), (/ab+c/ * /x/i, new Error(1)))) {
case '\u0041':
switch (((['hello', 3] ? 1 : new WeakMap())) ?? (Array.from({ length: 2 }, (e, i) => i * -1) + '0' > 'abc')) {
case 10:
print(NaN);
break;
case /x/i:
case 255:
print(undefined);
default:
;
}
break;
case 0x10:
case 'abc':
print('0');
default:
eval("1 + 2");
}
