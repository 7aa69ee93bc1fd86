print(`t5 ${+(+('a,b,c'))} end`, /x/i);
var w8 = 2;
while (w8 > 0) {
w8--;
print(`t3 ${Math.max((w8) && (w8), w8 >>> w8)} end`);
}
print(`t7 ${String.raw`a${`t4 ${w8} end`}b`} end`);
w8 &= (("x" ? w8 : /ab+c/), (/ab+c/ ? '\u0041' : w8)) <= w8[1e3];
function run8(x, item) {
item = { value0: w8[[1, 2, 3].y] };
print((function (u) {
return u;
})(String.raw`a${w8.p0}b`), []);
switch (String(!(x >>> /[0-9]+/g))) {
case '\n':
eval("[1, 2].length");
break;
case /[0-9]+/g:
case true:
++w8;
default:
JSON.stringify(Object.keys({ a: 1 }));
}
print(arguments.length);
return Math.sqrt(item.length, w8);
}
print(run8(Infinity, 'a,b,c'));
w8 = ((p, q = undefined) => p + q)(w8.length);
w8 <<= Array.from({ length: 0 }, (e, i) => i * 1e3);
print(Math.abs(Array.from({ length: 2 }, (e, i) => i * 1), run8([NaN])));
print(w8, Math.sqrt(Array.from({ length: 1 }, (e, i) => i * 1e3), w8));
eval("var ev = 3; ev * 2");
for (let i1 = 0; i1 < 2; i1++) {
print(Array.from({ length: 4 }, (e, i) => i * 0));
function f8() {
print(w8);
++w8;
i1 = Math.floor(`t8 ${(undefined, i1)} end`, [i1]);
return `t1 ${({ prop0: w8, value1: i1 }) && ((undefined) && ('abc'))} end`;
}
print(f8());
}
