eval("1 + 2");
/x/i;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
;
eval("1 + 2");
switch (-(/x/i)) {
case /[0-9]+/g:
;
break;
case false:
case 255:
;
default:
;
}
for (let k = 0; k < 3; k++) {
k--;
k;
}
