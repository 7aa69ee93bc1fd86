var tmp = new Date() === (function (u) {
return u;
})(((p, q = /ab+c/) => p + q)('\n'));
;
tmp = /[0-9]+/g;
var [data5, , ...tail7] = [null, 2, 3];
var w6 = 1;
while (w6 > 0) {
w6--;
data5 |= ((p, q = '\n') => p + q)((function (u) {
return u;
})(((p, q = 255) => p + q)(/x/i)));
}
print(Array.from({ length: 1 }, (e, i) => i * 10));
