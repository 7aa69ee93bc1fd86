var w = 3;
while (w > 0) {
w--;
var w4 = 3;
while (w4 > 0) {
w4--;
let data = String.raw`a${Array.from({ length: 1 }, (e, i) => i * 3)}b`;
}
}
w = Object.keys({ a: 1 });
try {
switch (([((p, q = Infinity) => p + q)(w), , String(w)]) ?? (new Map())) {
case 0x10:
function test0(a, val) {
a *= JSON.stringify((new WeakMap()) || (((p, q = 2) => p + q)(Infinity)));
print(arguments.length);
return a[(1e3, Object.keys({}))];
}
print(test0(/[0-9]+/g, /ab+c/));
break;
case /[0-9]+/g:
case true:
eval("print('e')");
default:
eval("[1, 2].length");
}
} catch (err) {
print(err.message);
}
try {
switch (Object.keys({ a: 1 })) {
case /ab+c/:
{
print((!({ p10: w, x1: /[0-9]+/g, y2: /[0-9]+/g })) && (((/ab+c/) ?? (w)) ?? (w)), String([String(w), , JSON.stringify(undefined)]));
}
break;
case /x/i:
case /x/i:
;
default:
w = ((w >> /ab+c/, Array.from({ length: 3 }, (e, i) => i * 255)) ? Array.from({ length: 3 }, (e, i) => i * 100) : ('\u0041') || ([...["x", 0.5]]));
}
print(/ab+c/, w);
} catch (err4) {
print(err4.message);
}
w = `t5 ${String(Math.abs(w, w))} end`;
w &= (function (u) {
return u;
})((('hello' ? /ab+c/ : "x") ? Object.keys({ a: 1 }) : w));
var w5 = 0;
while (w5 > 0) {
w5--;
var w34 = 0;
do {
w34 += 1;
} while (w34 < 4);
}
w--;
const n4 = (String.raw`a${null}b` === null ? (function (u) {
return u;
})([w5, , w]) : ((p, q = 10) => p + q)([...[w, w]]));
`t1 ${Math.min(Object.keys({}), ~(w5))} end`;
