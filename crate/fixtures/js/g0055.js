var [obj8, , ...rest6] = ['a,b,c', 2, 3];
switch (new Error(10)) {
case 'abc':
;
break;
case undefined:
case /x/i:
print(Array.from({ length: 2 }, (e, i) => i * 255));
default:
;
}
switch (JSON.stringify(Object.keys({}))) {
case /[0-9]+/g:
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
break;
case '0':
case null:
eval("var ev = 3; ev * 2");
default:
w7 |= '0';
}
print(((p, q = /ab+c/) => p + q)(obj8), JSON.stringify([[obj8, , obj8], { value0: obj8, x1: obj8 }, [obj8]]));
let acc = `t0 ${Object.keys([1, 2])} end`;
String((/[0-9]+/g ? obj8 : acc)) <= [...[[acc, , '\u0041'], (function (u) {
return u;
})(null)]];
;
print([Math.max(+(-1), ((p, q = 'a,b,c') => p + q)(0))], JSON.stringify(String.raw`a${Array.from({ length: 3 }, (e, i) => i * 2)}b`));
