print(true);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
;
const res = void ([JSON.stringify(/[0-9]+/g), , (function (u) {
return u;
})(3)]);
eval("var ev = 3; ev * 2");
;
;
try {
print(255);
throw new RangeError('\n');
} catch (ex) {
print(ex);
}
