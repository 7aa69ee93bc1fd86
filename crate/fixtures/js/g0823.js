outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
var w5 = 0;
do {
w5 += 1;
} while (w5 < 1);
for (let p7 of []) {
eval("var ev = 3; ev * 2");
}
for (var k2 in { a: 1, b: 2 }) {
{
w5--;
try {
++w5;
print(k2.y, (Math.pow([], (w5, k2))) && (JSON.stringify(String.raw`a${1e3}b`)));
} catch (e2) {
print(e2);
}
}
}
w5 = Array.from({ length: 0 }, (e, i) => i * 10);
if ((function (u) {
return u;
})((w5.y, w5))) {
w5 = false;
w5 -= (function (u) {
return u;
})([...[w5, JSON.stringify(/ab+c/)]]);
print(w5, Array.from({ length: 0 }, (e, i) => i * -1));
} else {
print((function (u) {
return u;
})(String({ p00: 1, p01: "x", next2: 'hello' })));
}
