switch (undefined) {
case true:
;
break;
case '\u0041':
case /[0-9]+/g:
print(String.raw`a${`t5 ${''} end`}b`, new Set());
default:
`t0 ${{ p10: [...[NaN, /[0-9]+/g]] }} end`;
}
var w8 = 0;
while (w8 > 0) {
w8--;
w8 += null;
}
;
if (w8[`t4 ${w8} end`] + (function (u) {
return u;
})([w8, 100, w8])) {
print(new Object(), new Error(0));
} else {
;
{
var w4 = 2;
while (w4 > 0) {
w4--;
var data = [void (String.raw`a${3}b`), , `t5 ${(function (u) {
return u;
})(w4)} end`];
}
}
}
