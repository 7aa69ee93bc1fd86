print(((p, q = /[0-9]+/g) => p + q)((function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * Infinity))), JSON.stringify([1, 2, 3]['abc']) >= 'str'[`t8 ${/x/i} end`]);
var w6 = 0;
while (w6 > 0) {
w6--;
let val1 = ([] !== "x") ?? ((function (u) {
return u;
})(/x/i));
}
var c = function* () {
yield /ab+c/;
yield* [1, 2];
};
var b7 = { c, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
