print('\u0041');
;
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
print(JSON.stringify((-1, new Array())), String(void ((0 ? /ab+c/ : 10))));
{
print(/x/i);
eval("1 + 2");
}
;
const val0 = '0';
var a = { a, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
;
