switch ('str'[new WeakMap()]) {
case '\u0041':
;
break;
case 3:
case 'hello':
Array.from({ length: 2 }, (e, i) => i * 10);
default:
let b = /[0-9]+/g;
}
print(null);
var w = 3;
while (w > 0) {
w--;
var w25 = 0;
do {
w25 += 1;
} while (w25 < 1);
}
var w20 = 0;
do {
w20 += 1;
} while (w20 < 3);
var w15 = 1;
while (w15 > 0) {
w15--;
try {
--w15;
eval("[1, 2].length");
} catch (ex) {
print(ex.message);
}
}
print(Math.min(`t1 ${[w15, , w15]} end`, ~(Array.from({ length: 4 }, (e, i) => i * 10))));
w15 = `t3 ${Array.from({ length: 3 }, (e, i) => i * -1)} end`;
