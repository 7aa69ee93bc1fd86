var w = 0;
do {
w += 1;
} while (w < 4);
Math.round((function (u) {
return u;
})(((p, q = /x/i) => p + q)(w)), Object.keys({}));
w--;
const val = { value0: Object.keys({}), p01: /[0-9]+/g, p02: new Object() };
