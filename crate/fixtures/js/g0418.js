eval("1 + 2");
new Array(10);
var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
w0++;
let key = [{ p10: -(w0) }];
const res8 = Infinity;
var item = [...['str'.next, ((p, q = true) => p + q)((function (u) {
return u;
})(key))]];
