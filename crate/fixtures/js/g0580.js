if ([[false == true, , ('\n') || (undefined)], , (new Set()) ?? (JSON.stringify(null))]) {
;
;
print(/[0-9]+/g);
}
print('\u0041');
print({ p10: (function (u) {
return u;
})(Math.abs(100, '\u0041')), next1: { y0: [1, , false], length1: Array.from({ length: 0 }, (e, i) => i * 10), value2: new Object() } });
if (-(Math.round([1, 2, 3].x, `t4 ${true} end`))) {
switch (Math.pow(String(Object.keys({})), Math.round((/ab+c/, /ab+c/), Math.round('hello', NaN)))) {
case -1:
switch ([/x/i, JSON.stringify(Math.pow(false, '0')), 1]) {
case /x/i:
print(null);
break;
case /ab+c/:
case /x/i:
print([...[undefined, Math.round(({ x: 1, length: 2 }).next, (false, /x/i))]], ({ x: 1, length: 2 })[[JSON.stringify(false), , Object.keys({ a: 1 })]]);
default:
;
}
break;
case null:
case '0':
;
default:
print([String(+(255)), , 'str'.prop]);
}
print(2);
}
;
