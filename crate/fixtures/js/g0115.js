print(0);
switch (Math.abs([/x/i] < `t2 ${/x/i} end`, String.raw`a${(function (u) {
return u;
})(/ab+c/)}b`)) {
case '\u0041':
var m = (u, v = Infinity) => u + v;
break;
case false:
case '0':
m--;
default:
m |= ((p, q = "x") => p + q)([JSON.stringify(true), , [/[0-9]+/g, , -1]]);
}
if (100) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
}
let key5 = (((p, q = false) => p + q)(Object.keys({ a: 1 })), Array.from({ length: 4 }, (e, i) => i * 3));
;
{
;
for (var j = 0; j < 5; j++) {
switch ((function (u) {
return u;
})(key5)) {
case false:
[...[j, Math.pow(JSON.stringify(j), { y0: true, next1: j })]];
break;
case '\n':
case 100:
eval("var ev = 3; ev * 2");
default:
;
}
print(String((String.raw`a${null}b`) || (`t7 ${key5} end`)), `t4 ${Object.keys({ a: 1 })} end`);
}
}
