if ([]) {
function run(count, acc) {
;
print(arguments.length);
return /ab+c/;
}
print(run(100, Infinity));
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
}
} else {
;
}
switch ({ p10: ((p, q = '\u0041') => p + q)(false >> 1), x1: Array.from({ length: 2 }, (e, i) => i * 0), p02: new Array(3) }) {
case true:
print(String(String.raw`a${!(true)}b`), new Set());
break;
case /ab+c/:
case /x/i:
print(((p, q = 'a,b,c') => p + q)([...[undefined, Object.keys({ a: 1 })]]));
default:
const arr9 = new Array(1);
}
;
;
var key2 = function* () {
yield 0.5;
yield* [1, 2];
};
for (let i8 = 0; i8 < 5; i8++) {
--i8;
try {
new Date(1);
var w = 0;
while (w > 0) {
w--;
key2 += `t1 ${`t8 ${new Date()} end`} end`;
}
} catch (err1) {
print(err1.message);
}
}
;
