String(undefined);
var w = 3;
while (w > 0) {
w--;
((p, q = '0') => p + q)(Array.from({ length: 1 }, (e, i) => i * 0.5));
}
if (((p, q = /x/i) => p + q)(w.p0)) {
print(`t4 ${String(((p, q = '\u0041') => p + q)('hello'))} end`);
w += (Math.sqrt((w ? NaN : null), String(255)) ? ((p, q = false) => p + q)({ x0: Infinity }) : `t8 ${(w, /x/i)} end`);
}
;
w++;
((function (u) {
return u;
})(Math.sqrt(w, /ab+c/))) || ([w & '']);
w = Array.from({ length: 1 }, (e, i) => i * -1);
switch (new Array(3)) {
case 1e3:
var w2 = 0;
while (w2 > 0) {
w2--;
w2 = (w2.prop, ({ p10: w2 }) && ((true) || (1)));
}
break;
case /x/i:
case 'hello':
w2++;
default:
w2 = w;
}
