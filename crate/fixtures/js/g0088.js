outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
for (let k = 0; k < 3; k++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
var w = 2;
while (w > 0) {
w--;
++w;
}
}
eval("[1, 2].length");
{
switch (Object.keys([1, 2])) {
case "x":
;
break;
case /[0-9]+/g:
case null:
Object.keys({ a: 1 });
default:
print((function (u) {
return u;
})(/x/i));
}
}
