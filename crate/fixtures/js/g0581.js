print("x");
for (let k of 'ab') {
for (let k4 in [1, 2]) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue;
}
}
}
}
;
switch ('str'[String.raw`a${String(2)}b`]) {
case 0.5:
if ([JSON.stringify(!('')), new Object(), [...[255, 'str'.length]]]) {
{
10;
const z4 = (function (u) {
return u;
})(`t0 ${({ x: 1, length: 2 })[undefined]} end`);
}
} else {
function h(y) {
(Math.pow(String.raw`a${"x"}b`, ((p, q = true) => p + q)(10)) ? y[{ x0: false }] : String({ y0: y }));
return JSON.stringify(~(y));
}
h("x");
if ([...['\n', JSON.stringify((2, /ab+c/))]]) {
print(255);
} else {
;
print('0');
}
}
break;
case undefined:
case 1e3:
print(/x/i);
default:
;
}
-(String.raw`a${String(/ab+c/)}b`);
