;
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
;
try {
;
;
} catch (e) {
print(e);
} finally {
{
try {
var z = (function (u) {
return u;
})(Object.keys([1, 2]));
z |= JSON.stringify(new Set());
throw new Error('\n');
} catch (e2) {
print(e2);
}
}
}
var val = async function () {
return await null;
};
val = (function (u) {
return u;
})([...[[...[val, 0]], "x" + val]]);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
val = (function (u) {
return u;
})(([...[val, null]]) || (false));
{
var w5 = 0;
while (w5 > 0) {
w5--;
var w = 0;
do {
w += 1;
} while (w < 4);
}
function wrap6(arr, z7) {
const m0 = Math.floor(([]) || (Infinity), 'str'.value);
arr = Array.from({ length: 0 }, (e, i) => i * 0x10);
return (m0[Object.keys([1, 2])]) && (3);
}
print(wrap6('0', 0));
}
