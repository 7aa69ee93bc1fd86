var w = 0;
do {
w += 1;
} while (w < 2);
print(String.raw`a${String(255)}b`, { next0: new Object() >>> Math.abs(1e3, w) });
--w;
print(w);
--w;
var str = function* () {
yield /[0-9]+/g;
yield* [1, 2];
};
function compute(str6, flag) {
str &= w;
return new Set() < str6.next;
}
print(compute(2, null));
var w11 = 0;
do {
w11 += 1;
} while (w11 < 2);
var w5 = 3;
while (w5 > 0) {
w5--;
w5++;
}
print(w5.prop);
for (const k in [1, 2]) {
for (let j = 0; j < 3; j++) {
const item = [];
;
}
}
