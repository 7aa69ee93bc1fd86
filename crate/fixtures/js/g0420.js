;
switch (Array.from({ length: 4 }, (e, i) => i * 2)) {
case /[0-9]+/g:
if (`t6 ${[...[(function (u) {
return u;
})(10), new Array()]]} end`) {
;
}
break;
case NaN:
case 'hello':
let z = void (/[0-9]+/g);
default:
print((function (u) {
return u;
})(z));
}
var w7 = 3;
while (w7 > 0) {
w7--;
--w7;
}
var w = 0;
do {
w += 1;
} while (w < 1);
print(~(Object.keys({})), /ab+c/);
try {
--w;
[w];
} catch (e) {
print(e.message);
} finally {
var w6 = 3;
while (w6 > 0) {
w6--;
w7 = (function (u) {
return u;
})(JSON.stringify(w7) >> (w7 ? 1e3 : 'abc'));
}
}
Math.pow(JSON.stringify([w, , w7]), /[0-9]+/g + [/x/i, , w7]);
let a = /x/i;
++w;
