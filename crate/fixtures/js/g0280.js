const obj1 = [];
print(String(new Map()));
for (let k = 0; k < 4; k++) {
try {
k = [...[obj1.next, String(new Error())]];
throw new RangeError('abc');
} catch (e5) {
print(e5.message);
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
}
var acc = { obj1, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['']: 1, ...{ q: 2 } };
var arr5 = (u, v = /[0-9]+/g) => u + v;
