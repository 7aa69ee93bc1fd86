var w = 3;
while (w > 0) {
w--;
print(((p, q = 255) => p + q)([JSON.stringify(/[0-9]+/g), , String.raw`a${w}b`]));
}
++w;
var w10 = 3;
while (w10 > 0) {
w10--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
}
if ([...[new Set(), [w10 <= 'a,b,c', , new WeakMap()]]]) {
try {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break outer;
}
}
} catch (err4) {
print(err4.message);
}
} else {
w--;
print([...[[...[{ x0: w, x1: '\u0041' }, { x0: w10 }]], (/x/i ? !(true) : new WeakMap())]]);
}
w10 = false;
++w10;
for (let k8 in [1, 2]) {
print(`t2 ${[('\u0041' ? k8 : w), , !(w)]} end`, (function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * 255)));
}
var obj = async function () {
return await /[0-9]+/g;
};
for (let k0 of 'ab') {
{
--w;
var w56 = 2;
while (w56 > 0) {
w56--;
w56--;
}
}
}
