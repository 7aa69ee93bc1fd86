var w6 = 3;
while (w6 > 0) {
w6--;
(function (u) {
return u;
})((false - w6 ? w6 : w6.p1));
}
{
--w6;
const n0 = w6;
}
try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
} catch (err6) {
print(err6);
}
try {
var w = 2;
while (w > 0) {
w--;
print((function (u) {
return u;
})(((p, q = null) => p + q)((w6) ?? (w))));
}
w *= [`t6 ${new Object(3)} end`, , JSON.stringify([w, , w])];
throw new Error('a,b,c');
} catch (err) {
print(err);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
w6 *= ((p, q = /ab+c/) => p + q)([w6, , [/ab+c/, , w6]]);
var acc = { w6, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
{
print((function (u) {
return u;
})(JSON.stringify(!(false))));
++acc;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
