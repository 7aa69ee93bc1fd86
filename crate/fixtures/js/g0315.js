print(3);
var w4 = 1;
while (w4 > 0) {
w4--;
;
}
var item = { item, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['abc']: 1, ...{ q: 2 } };
++item;
print(typeof (({ x: 1, length: 2 }).value), JSON.stringify([[...[w4, item]], Array.from({ length: 0 }, (e, i) => i * 3)]));
print(item.x, String.raw`a${item}b`);
{
if ({ p10: { length0: String.raw`a${w4}b`, value1: (w4) || (item) } }) {
;
}
switch (((p, q = /ab+c/) => p + q)(-(new Map()))) {
case '\u0041':
w4 *= `t1 ${Object.keys({})} end`;
break;
case 'abc':
case /[0-9]+/g:
print((item[Math.pow(/ab+c/, w4)] ? void (new Error(10)) : "x"), ((~(w4)) && (/x/i), item[(function (u) {
return u;
})(w4)]));
default:
item = w4;
}
}
switch ({ p10: item[!(0)], x1: String.raw`a${Object.keys({ a: 1 })}b`, value2: w4[`t7 ${w4} end`] }) {
case 'abc':
item = void (`t1 ${[...["x", 0x10]]} end`);
break;
case /[0-9]+/g:
case "x":
++w4;
default:
++item;
}
switch (void (w4.prop)) {
case undefined:
Array.from({ length: 0 }, (e, i) => i * 3);
break;
case 0:
case 'abc':
print(Math.pow([String.raw`a${item}b`, item[w4]], "x"));
default:
let res = '';
}
item++;
