var item5 = async function () {
return await /x/i;
};
var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
var w = 0;
do {
w += 1;
} while (w < 4);
var m7 = { m7, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
var data4 = function* () {
yield 100;
yield* [1, 2];
};
print(Array.from({ length: 0 }, (e, i) => i * 10));
var w17 = 3;
while (w17 > 0) {
w17--;
String(String.raw`a${Array.from({ length: 2 }, (e, i) => i * 0x10)}b`);
}
