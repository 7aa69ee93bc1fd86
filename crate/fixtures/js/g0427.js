print(1e3);
undefined;
;
;
function g0(b, n) {
if (/[0-9]+/g) {
n = '\u0041';
let acc = { prop0: new Map() };
} else {
b = b;
}
if (`t7 ${[...[~(false), b]]} end`) {
;
b++;
} else {
let res8 = `t0 ${Object.keys({ a: 1 })} end`;
}
++n;
return new Array(10);
}
print(g0(1, -1));
;
switch (`t5 ${([1, 2, 3][/[0-9]+/g], Object.keys({ a: 1 }))} end`) {
case /ab+c/:
;
break;
case /x/i:
case undefined:
print(255);
default:
;
}
;
{
print(String.raw`a${new Date()}b`, []);
;
}
print((('str'['abc'], JSON.stringify('abc')) ? (`t7 ${true} end` ? [/[0-9]+/g, , 0.5] : Array.from({ length: 1 }, (e, i) => i * Infinity)) : [...["x", String.raw`a${true}b`]]), ((p, q = '\u0041') => p + q)(true));
;
