255;
print('a,b,c');
print(false);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
;
;
`t0 ${(function (u) {
return u;
})(1e3)} end` == new WeakMap();
let c = Math.sqrt(Object.keys({}), new Error());
c = (function (u) {
return u;
})(((c ? c : c) ? ('abc' ? c : c) : typeof (c)));
