;
debugger;
;
print(null);
print('0');
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
{
const key4 = 'str'[[...[({ x: 1, length: 2 }).y, 0]]];
switch ((({ value0: key4 }, key4.value) ? new Map() : String(new Array(3)))) {
case -1:
const y = [...[new Error(), (new Map()) || (key4)]];
break;
case null:
case /ab+c/:
;
default:
print(key4, (false, ({ y0: /x/i }) && (y)));
}
}
var obj = { obj, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
obj++;
