print(true);
var acc9 = { acc9, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
print(0);
print((acc9, (acc9) || (/[0-9]+/g)) != Array.from({ length: 1 }, (e, i) => i * 0.5), String.raw`a${[new Set(), , !(0x10)]}b`);
const tmp6 = new Set();
var w1 = 0;
while (w1 > 0) {
w1--;
w1--;
}
