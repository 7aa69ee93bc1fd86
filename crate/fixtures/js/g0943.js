;
;
print(String(({ x: 1, length: 2 })[false / 1]), [(((p, q = -1) => p + q)(1)) && (new Date(0)), new Map(), ['abc' ^ undefined, { p10: null }]]);
print(true);
var b7 = Object.keys({});
b7++;
switch (Object.keys({ a: 1 })) {
case undefined:
for (let k = 0; k < 3; k++) {
var { y: key6 = 'abc', ...tail } = { x: 1 };
print([k, , ([...[true, false]], String(k))]);
}
break;
case Infinity:
case 100:
b7 = (function (u) {
return u;
})(JSON.stringify((function (u) {
return u;
})(b7)));
default:
eval("var ev = 3; ev * 2");
}
