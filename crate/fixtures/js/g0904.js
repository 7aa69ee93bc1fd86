;
try {
try {
var count = new Date();
if (JSON.stringify('0')) {
var b = { p00: [undefined, '0', count], value1: (count ? false : count) > Math.round(/x/i, count), prop2: +(String.raw`a${'\u0041'}b`) };
count--;
eval("1 + 2");
} else {
;
;
}
throw new Error('abc');
} catch (ex) {
print(ex.message);
}
print(((p, q = '\n') => p + q)(new Error(3)) - Array.from({ length: 4 }, (e, i) => i * 3));
throw new Error('\u0041');
} catch (e) {
print(e.message);
}
print(undefined);
var w = 0;
while (w > 0) {
w--;
try {
print(Math.min(w, undefined), Math.pow([...[JSON.stringify(w), ((p, q = true) => p + q)(w)]], w));
switch (3) {
case NaN:
w++;
break;
case "x":
case -1:
++w;
default:
w--;
}
} catch (e0) {
print(e0.message);
}
}
