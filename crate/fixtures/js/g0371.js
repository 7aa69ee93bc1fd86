print(true);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
let a = `t5 ${(function (u) {
return u;
})(JSON.stringify('0'))} end`;
function g(flag7, n5) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue;
}
}
print(arguments.length);
return new Object(1);
}
print(g(false, /x/i));
