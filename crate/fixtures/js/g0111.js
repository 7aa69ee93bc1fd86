print((String.raw`a${new WeakMap()}b` ? /[0-9]+/g : [{ value0: 0.5, p11: 0, x2: true }, , -('')]), (((p, q = /ab+c/) => p + q)('\n')) ?? ({ y0: Object.keys({}), length1: JSON.stringify('\u0041'), y2: [1, 2, 3][/x/i] }));
;
;
if (Array.from({ length: 3 }, (e, i) => i * 3)) {
for (var k8 = 0; k8 < 1; k8++) {
print(JSON.stringify(new Error()), new Map());
try {
eval("1 + 2");
} catch (err6) {
print(err6);
}
}
try {
print(String.raw`a${new Array()}b`, true);
print(/ab+c/);
} catch (e4) {
print(e4);
}
try {
;
if (new Map()) {
var count = new Map();
}
throw new Error('abc');
} catch (err) {
print(err.message);
} finally {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue outer;
}
}
}
} else {
for (let i0 = 0; i0 < 3; i0++) {
i0++;
({ next0: i0[undefined << 'abc'], y1: i0.prop });
}
var w6 = 3;
while (w6 > 0) {
w6--;
w6 = String(Array.from({ length: 3 }, (e, i) => i * 255));
}
}
print(/x/i);
function g6(n8, val) {
val = { next0: Object.keys({ a: 1 }), length1: "x", y2: Object.keys({ a: 1 }) };
try {
print(Math.sqrt(val, (Array.from({ length: 0 }, (e, i) => i * Infinity), `t4 ${n8} end`)));
eval("var ev = 3; ev * 2");
} catch (ex) {
print(ex.message);
}
++val;
return val;
}
print(g6(true, undefined));
try {
eval("var ev = 3; ev * 2");
} catch (ex5) {
print(ex5.message);
}
;
