function compute(c2) {
try {
;
print(((p, q = true) => p + q)(JSON.stringify((c2) ?? (-1))));
} catch (err3) {
print(err3);
}
new Error() < +(c2[c2]);
{
print(~(true), String(([c2, , undefined], `t1 ${c2} end`)));
++c2;
}
return ([...[[...[c2, -1]], new Object(1)]]) && (`t8 ${new Set()} end`);
}
compute(/ab+c/);
print(0x10);
print(JSON.stringify(false));
for (let i = 0; i < 3; i++) {
((JSON.stringify(null)) && (new Date(1))) && (((p, q = false) => p + q)(i));
for (let k1 = 0; k1 < 1; k1++) {
try {
const count = String.raw`a${(function (u) {
return u;
})([])}b`;
var tmp = String((Array.from({ length: 4 }, (e, i) => i * 100) ? (/[0-9]+/g, i) : (-1 ? /x/i : count)));
} catch (ex) {
print(ex.message);
}
function h(flag5, m6) {
'\n';
print(compute(), { p10: ([flag5, , /x/i], compute()), prop1: m6, p12: Array.from({ length: 4 }, (e, i) => i * NaN) });
return Object.keys({ a: 1 });
}
print(h('hello', undefined));
}
}
if (((p, q = 100) => p + q)(((null) || (10)) ?? (new Object()))) {
print(/ab+c/);
{
;
eval("print('e')");
}
} else {
JSON.stringify('str'.value);
}
var { value: flag = null, ...rest9 } = { x: 1 };
flag += flag[[flag.p1, , new Array()]];
