var w = 2;
while (w > 0) {
w--;
var w11 = 0;
do {
w11 += 1;
} while (w11 < 4);
}
var x5 = u => {
return u;
};
print(Array.from({ length: 4 }, (e, i) => i * NaN));
eval("[1, 2].length");
;
var w5 = 1;
while (w5 > 0) {
w5--;
;
}
var w22 = 2;
while (w22 > 0) {
w22--;
try {
x5 = 2;
w = 1e3;
} catch (e) {
print(e.message);
}
}
{
for (const p in [1, 2]) {
for (const k15 of 'ab') {
const key4 = `t5 ${x5} end`;
}
}
var w24 = 0;
do {
w24 += 1;
} while (w24 < 2);
}
print({ next0: Object.keys({}), next1: 'str'.length, p02: Array.from({ length: 1 }, (e, i) => i * Infinity) }, (Array.from({ length: 2 }, (e, i) => i * 2)) ?? (w5[10]));
