print(String.raw`a${'\n'}b`, ({ x: 1, length: 2 })[(function (u) {
return u;
})(true)]);
;
for (var p in { a: 1, b: 2 }) {
print(!(String.raw`a${`t0 ${p} end`}b`), String((p) || ((function (u) {
return u;
})(false))));
}
const obj = { p10: 'str'[(/[0-9]+/g) && (3)] };
;
print(0);
switch ((String.raw`a${new Set()}b`, (function (u) {
return u;
})(String.raw`a${obj}b`))) {
case /ab+c/:
var w3 = 3;
while (w3 > 0) {
w3--;
;
}
break;
case 255:
case 1e3:
;
default:
--w3;
}
const n = JSON.stringify([JSON.stringify('0'), , new Array(3)]);
