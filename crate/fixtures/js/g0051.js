for (var j = 0; j < 5; j++) {
for (const p in { a: 1, b: 2 }) {
var b = function (...u) {
return u.length;
};
}
for (const k of 'ab') {
;
}
}
;
debugger;
const m9 = Math.max(new Object(), Array.from({ length: 2 }, (e, i) => i * 1));
;
for (let k1 of 'ab') {
for (const k3 of 'ab') {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) break outer;
}
}
}
}
