;
print('');
print(/ab+c/);
try {
print(new Object());
} catch (e9) {
print(e9.message);
}
;
var w7 = 3;
while (w7 > 0) {
w7--;
if ((([w7, , 10], w7.length) ? [JSON.stringify(w7), , new Object()] : typeof (~(w7)))) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue outer;
}
}
var w4 = 1;
while (w4 > 0) {
w4--;
;
}
++w4;
} else {
let b = (function (u) {
return u;
})([...['0', w7]] < { next0: "x" });
eval("1 + 2");
}
}
print(10);
for (let k0 = 0; k0 < 2; k0++) {
eval("[1, 2].length");
for (var p of [1, 2, 3]) {
eval("var ev = 3; ev * 2");
}
}
