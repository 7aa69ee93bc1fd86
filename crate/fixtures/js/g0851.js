for (var p1 of 'ab') {
;
}
;
print(['\n', , JSON.stringify(Math.max(/[0-9]+/g, false))]);
var count = { count, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
count = Math.round(new Set(), false - count) > 'abc';
for (var j = 0; j < 1; j++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
var { x: a = undefined, ...tail6 } = { x: 1 };
}
function run0(obj) {
obj++;
obj = Array.from({ length: 2 }, (e, i) => i * 1e3);
return /x/i;
}
print(run0(2));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
print(count);
print(new Map(), count);
var w3 = 1;
while (w3 > 0) {
w3--;
eval("[1, 2].length");
}
