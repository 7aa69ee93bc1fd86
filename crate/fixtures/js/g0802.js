eval("var ev = 3; ev * 2");
print(String.raw`a${{ p00: String.raw`a${1e3}b` }}b`);
var w8 = 0;
while (w8 > 0) {
w8--;
if (((JSON.stringify(w8), String(false))) && (((null, /ab+c/) ? Array.from({ length: 4 }, (e, i) => i * 100) : (w8) && ('')))) {
w8 = Array.from({ length: 2 }, (e, i) => i * NaN);
}
}
const str = JSON.stringify((function (u) {
return u;
})(w8[w8]));
({ x0: +(((p, q = '0') => p + q)(false)), p11: [/x/i > w8, , new Map()], length2: +(new Error(10)) });
print(false, JSON.stringify(w8));
w8 = (Math.floor(str[Infinity], w8[str])) && (String.raw`a${String.raw`a${/ab+c/}b`}b`);
