;
;
var a1 = function* () {
yield 0.5;
yield* [1, 2];
};
print((String(new WeakMap()), JSON.stringify(Math.floor(a1, /x/i))));
try {
print(((p, q = 100) => p + q)([String(a1), , ~(a1)]));
var w = 0;
do {
w += 1;
} while (w < 1);
} catch (ex) {
print(ex.message);
} finally {
{
function run() {
a1 = [3, Math.pow((/x/i) || (100), `t5 ${false} end`)];
'\n';
eval("print('e')");
print(arguments.length);
return { p00: a1, p11: -1 } < (a1 ? /[0-9]+/g : a1) / '0';
}
print(run());
}
}
var a4 = { a1, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['abc']: 1, ...{ q: 2 } };
print(new WeakMap());
try {
print([[String.raw`a${a1}b`, [a1]], a1[[...[Infinity, 10]]], ((p, q = undefined) => p + q)({ next0: a4 })]);
for (const k6 of 'ab') {
a1 |= (typeof (k6)) || (Math.min(new Set(), new Object()));
}
} catch (err) {
print(err);
} finally {
var w32 = 0;
do {
w32 += 1;
} while (w32 < 4);
}
