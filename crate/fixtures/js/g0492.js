for (var i2 = 0; i2 < 5; i2++) {
;
--i2;
}
try {
for (var i8 = 0; i8 < 3; i8++) {
var flag = { i8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\n']: 1, ...{ q: 2 } };
var w = 0;
do {
w += 1;
} while (w < 4);
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
throw new Error('');
} catch (ex) {
print(ex);
} finally {
eval("[1, 2].length");
}
;
{
print({ prop0: (('abc' ? /x/i : undefined)) || (JSON.stringify(/[0-9]+/g)), next1: String.raw`a${'a,b,c'}b` ^ Math.max('0', false) });
;
}
for (let j3 = 0; j3 < 3; j3++) {
j3++;
j3 &= JSON.stringify((function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * 0)));
}
var str6 = (u, v = '') => u + v;
;
try {
((p, q = '') => p + q)(str6[(str6, str6)]);
if (String.raw`a${(function (u) {
return u;
})([...[str6, /[0-9]+/g]])}b`) {
let flag6 = `t3 ${null} end`;
} else {
str6[[(str6, /ab+c/), String.raw`a${"x"}b`, undefined]];
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break outer;
}
}
}
} catch (ex0) {
print(ex0);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
