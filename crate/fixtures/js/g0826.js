;
function f(obj, b) {
--b;
obj--;
if (new.target) {
print('ctor');
}
return Math.sqrt(String(100 != /[0-9]+/g), [new Error(3), b[/[0-9]+/g], null]);
}
print(f('\u0041', /x/i));
;
var w8 = 0;
do {
w8 += 1;
} while (w8 < 4);
;
w8--;
switch ([1, 2, 3].next) {
case 0x10:
function g2(arr7, c) {
eval("var ev = 3; ev * 2");
return typeof (new Date(3));
}
g2(0, '0');
break;
case /[0-9]+/g:
case -1:
w8 = Object.keys({ a: 1 });
default:
const str6 = Array.from({ length: 2 }, (e, i) => i * 1e3);
}
