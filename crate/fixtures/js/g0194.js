{
var w = 3;
while (w > 0) {
w--;
'str'[[...[`t2 ${w} end`, ((p, q = /[0-9]+/g) => p + q)(w)]]];
}
try {
for (const p of [1, 2, 3]) {
w;
}
function wrap() {
;
print(arguments.length);
return [w, [Array.from({ length: 0 }, (e, i) => i * 10), , (true ? w : w)]];
}
print(wrap());
} catch (err1) {
print(err1);
} finally {
var count = { w, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['abc']: 1, ...{ q: 2 } };
}
}
if (String('hello')) {
print((/x/i ? [2, , '0'] : new Object()) << Math.floor(100, ['', , 255]));
} else {
;
}
print(({ y0: ((p, q = 'a,b,c') => p + q)(null) }, (Math.round(/[0-9]+/g, /x/i)) && ('')), { p10: "x", x1: [{ value0: /[0-9]+/g, length1: 3 }, , { prop0: /x/i, length1: 'abc' }] });
var key7 = u => {
return u;
};
print([...[((key7) ?? (100), key7[key7]), JSON.stringify(Array.from({ length: 3 }, (e, i) => i * -1))]], ({ x: 1, length: 2 }).length);
key7++;
key7 *= key7[((p, q = /[0-9]+/g) => p + q)('0') ^ String(key7)];
print(`t5 ${(key7.y) ?? ([true])} end`);
