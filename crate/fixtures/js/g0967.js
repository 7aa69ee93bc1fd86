print(new Error(1), new Map());
let z = String((function (u) {
return u;
})('a,b,c')) <= /ab+c/;
;
if ((function (u) {
return u;
})(-((NaN) ?? (z)))) {
;
if ([[false, , new Set()], new Error(3), [1, 2, 3].prop]) {
var w = 0;
while (w > 0) {
w--;
print((Math.pow(('0' ? NaN : z), (function (u) {
return u;
})(0.5)) ? /[0-9]+/g : w), w[z.prop]);
}
;
}
}
eval("1 + 2");
