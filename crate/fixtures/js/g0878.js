switch ([1, 2, 3][(typeof (1e3), 0)]) {
case /x/i:
if ('\n') {
eval("print('e')");
if ([Object.keys({})]) {
;
}
} else {
for (let i2 = 0; i2 < 3; i2++) {
i2--;
--i2;
}
var x = u => {
return u;
};
}
break;
case 0:
case undefined:
print(+({ y0: "x", next1: /ab+c/, y2: "x" }) >> String.raw`a${+(/x/i)}b`);
default:
;
}
print(false);
print('abc', (new Map()) && ((Object.keys({})) && ([/ab+c/, , '\n'])));
{
print('hello');
;
}
print(('\u0041') || (NaN));
for (var i = 0; i < 1; i++) {
i &= new Map();
print([[...[{ p10: true, value1: /x/i }, `t4 ${/[0-9]+/g} end`]], , i]);
}
if (new Set()) {
;
} else {
;
}
for (var p in [1, 2]) {
function helper(c) {
const b8 = JSON.stringify(new Array());
const m = { p10: b8.next };
p <<= `t0 ${(-(m)) && (new WeakMap())} end`;
return ([...[p | '\u0041', new Map()]], [JSON.stringify('')]);
}
print(helper('\u0041'));
}
print(0x10);
print(/[0-9]+/g);
var z = { z, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
