for (var i0 = 0; i0 < 2; i0++) {
i0++;
{
var w = 1;
while (w > 0) {
w--;
w = ((p, q = undefined) => p + q)({ x0: 'str'.y, value1: [...[false, /x/i]] });
}
}
}
eval("1 + 2");
try {
print(2);
var val = { val, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ["x"]: 1, ...{ q: 2 } };
} catch (ex) {
print(ex);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
;
{
;
}
if ([...[[1, 2, 3]["x" < "x"], 'str'.next]]) {
print([...[JSON.stringify(JSON.stringify(/[0-9]+/g)), String([...[3, /x/i]])]], new Object(1));
print(/x/i);
eval("[1, 2].length");
}
