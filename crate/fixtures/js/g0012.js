print(/ab+c/, []);
var m5 = async function () {
return await '';
};
for (let j8 = 0; j8 < 5; j8++) {
if (~(((p, q = false) => p + q)(((p, q = /[0-9]+/g) => p + q)(m5)))) {
var w = 0;
do {
w += 1;
} while (w < 3);
;
;
} else {
var w19 = 1;
while (w19 > 0) {
w19--;
print((String.raw`a${new WeakMap()}b` ? ((p, q = 0) => p + q)((function (u) {
return u;
})(m5)) : Object.keys({ a: 1 })), Array.from({ length: 3 }, (e, i) => i * Infinity));
}
}
new WeakMap();
}
[new Object(1), ('abc', []), Array.from({ length: 1 }, (e, i) => i * 0.5)];
++m5;
eval("[1, 2].length");
switch (m5) {
case '\n':
try {
var w2 = 0;
do {
w2 += 1;
} while (w2 < 2);
var w4 = 3;
while (w4 > 0) {
w4--;
print(((true) && (m5) * false ? ((p, q = undefined) => p + q)(((p, q = true) => p + q)(w2)) : Math.sqrt((/[0-9]+/g ? /[0-9]+/g : w2), ~(1e3))), [...[((p, q = '\u0041') => p + q)({ length0: m5, x1: 3 }), `t1 ${new Set()} end`]]);
}
throw new RangeError("x");
} catch (e8) {
print(e8.message);
}
break;
case /x/i:
case /ab+c/:
;
default:
print((Math.abs((m5, m5), Object.keys({}))) && (String(('abc' ? -1 : /x/i))), Array.from({ length: 1 }, (e, i) => i * 0.5));
}
