;
print(Array.from({ length: 0 }, (e, i) => i * Infinity), /x/i);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
try {
print(({ x: 1, length: 2 }).p1);
if (Object.keys([1, 2])) {
Math.floor(`t0 ${('abc') && ("x")} end`, (function (u) {
return u;
})(new Set()));
function h5() {
let obj7 = Math.abs(Math.floor({ p10: true, next1: 100, next2: 0 }, Math.max(true, '\n')), (function (u) {
return u;
})(String.raw`a${false}b`));
[...[1 < true, []]];
if (new.target) {
print('ctor');
}
print(arguments.length);
return (function (u) {
return u;
})((function (u) {
return u;
})(("x" ? /[0-9]+/g : obj7)));
}
print(h5());
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue;
}
}
} else {
{
let m = true;
m = (function (u) {
return u;
})(`t3 ${(function (u) {
return u;
})('a,b,c')} end`);
}
eval("[1, 2].length");
}
} catch (err) {
print(err.message);
}
