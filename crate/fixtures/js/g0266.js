;
try {
print(((('a,b,c' ? /x/i : 'abc'), 'str'[/[0-9]+/g]), (undefined, `t4 ${0x10} end`)));
`t8 ${JSON.stringify(`t8 ${3} end`)} end`;
throw new RangeError('0');
} catch (err) {
print(err.message);
}
var w = 3;
while (w > 0) {
w--;
++w;
}
w = !(null);
eval("[1, 2].length");
let x = [w, String([1e3, w, false])];
try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
throw new Error('abc');
} catch (err5) {
print(err5);
}
x++;
switch ((Math.max(`t2 ${false} end`, [...[x, 0.5]]), [w, /x/i] < (w) ?? (1e3))) {
case /[0-9]+/g:
switch (([...[((p, q = 'a,b,c') => p + q)(x), Object.keys([1, 2])]]) ?? ([Array.from({ length: 0 }, (e, i) => i * -1), , (function (u) {
return u;
})(3)])) {
case '\u0041':
for (let i6 = 0; i6 < 2; i6++) {
({ length0: w, p11: i6, prop2: [String(3), , `t0 ${'\n'} end`] });
eval("print('e')");
}
break;
case undefined:
case 'a,b,c':
x--;
default:
print((([...["x", /x/i]], [w, , x])) || (-(JSON.stringify(w))));
}
break;
case true:
case 2:
w = [...[Math.round(typeof ('\u0041'), ~(x)), Array.from({ length: 3 }, (e, i) => i * 1e3)]];
default:
w = { value0: (function (u) {
return u;
})('a,b,c'), length1: (Array.from({ length: 0 }, (e, i) => i * -1), [...[w, x]]) };
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
