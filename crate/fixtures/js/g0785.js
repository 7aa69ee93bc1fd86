;
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
var str8 = { str8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
try {
var acc3 = { prop0: JSON.stringify(true <= 1e3), y1: '', x2: [...[str8, (/ab+c/, "x")]] };
throw new RangeError('a,b,c');
} catch (ex) {
print(ex.message);
}
