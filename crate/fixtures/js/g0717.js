print(undefined);
for (let p7 of 'ab') {
;
}
new Object(0);
var w = 0;
do {
w += 1;
} while (w < 1);
for (var j = 0; j < 2; j++) {
function test8(data2, str6) {
w -= data2.x;
'';
j = String.raw`a${{ value0: Object.keys([1, 2]), length1: Math.abs(data2, true) }}b`;
return typeof ([...[data2 !== NaN, Array.from({ length: 3 }, (e, i) => i * 0)]]);
}
print(test8(/[0-9]+/g, /x/i));
try {
w |= new Map() * new Array(0);
throw new RangeError("x");
} catch (e2) {
print(e2.message);
}
}
