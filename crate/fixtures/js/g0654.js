function test2(data, n4) {
var w = 0;
do {
w += 1;
} while (w < 4);
[(Object.keys({ a: 1 }), n4.prop), { p10: !(1) }];
w = (`t2 ${/x/i} end` !== /x/i, data.y);
return w;
}
print(test2('abc', null));
print(String.raw`a${[String.raw`a${0.5}b`, , (true ? /[0-9]+/g : /ab+c/)]}b`);
for (var k5 = 0; k5 < 3; k5++) {
try {
if ([...[((p, q = /[0-9]+/g) => p + q)(Object.keys([1, 2])), Object.keys({})]]) {
k5 += k5;
--k5;
}
try {
print(String.raw`a${JSON.stringify((NaN) && (k5))}b`, { p00: Array.from({ length: 2 }, (e, i) => i * 0) });
throw new Error('a,b,c');
} catch (ex4) {
print(ex4);
}
} catch (ex) {
print(ex);
} finally {
try {
print({ next0: String.raw`a${Math.pow(k5, /ab+c/)}b`, next1: typeof (JSON.stringify(k5)) }, Math.pow({ length0: String.raw`a${k5}b` }, ((k5) ?? (k5)) ?? ((function (u) {
return u;
})(-1))));
} catch (e) {
print(e);
} finally {
var acc0 = k5.next;
}
}
if ([new Map()]) {
var w9 = 0;
do {
w9 += 1;
} while (w9 < 4);
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
print("x");
;
print(test2((['hello', , '\n'], ({ x: 1, length: 2 })[undefined]), ([]) ?? (~(/x/i))), String(((function (u) {
return u;
})(/[0-9]+/g)) && ([...['\u0041', true]])));
