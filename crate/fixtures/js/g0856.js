var str = function (...u) {
return u.length;
};
str--;
for (let k in [1, 2]) {
String(typeof ((function (u) {
return u;
})(k)));
}
var count = [...[new Object(), [(/x/i) && (str), new Date(), str.x]]];
var w = 3;
while (w > 0) {
w--;
(/x/i, (function (u) {
return u;
})((/[0-9]+/g, /[0-9]+/g)));
}
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
eval("[1, 2].length");
const obj7 = Object.keys({});
str |= Object.keys([1, 2]);
var w8 = 1;
while (w8 > 0) {
w8--;
eval("var ev = 3; ev * 2");
}
print(new Set());
