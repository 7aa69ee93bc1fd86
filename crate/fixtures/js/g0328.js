outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
print(2);
for (var k7 of [1, 2, 3]) {
let x = ({ x: 1, length: 2 })[JSON.stringify(JSON.stringify('\u0041'))];
}
try {
var w = 3;
while (w > 0) {
w--;
var w2 = 3;
while (w2 > 0) {
w2--;
w++;
}
}
} catch (err6) {
print(err6);
}
if ((({ x: 1, length: 2 })[('0' ? null : '\n')] ? Object.keys([1, 2]) : Object.keys({ a: 1 }))) {
print('a,b,c', 'str'[(~(true) ? new Object() : /ab+c/)]);
print(((false, new Map()) ? new Set() : String(((p, q = 3) => p + q)('\u0041'))));
} else {
try {
print(/[0-9]+/g);
print(Object.keys({}));
} catch (ex4) {
print(ex4);
} finally {
var { p1: m = /[0-9]+/g, ...rest } = { x: 1 };
}
}
print(null);
eval("1 + 2");
;
var c3 = { c3, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\n']: 1, ...{ q: 2 } };
