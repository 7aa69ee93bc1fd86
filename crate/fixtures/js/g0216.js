eval("var ev = 3; ev * 2");
/[0-9]+/g;
print([1, 2, 3][void (JSON.stringify('hello'))], (function (u) {
return u;
})([]));
function wrap1() {
print('a,b,c');
var w9 = 2;
while (w9 > 0) {
w9--;
w9 -= '0';
}
var w = 0;
do {
w += 1;
} while (w < 1);
return Array.from({ length: 3 }, (e, i) => i * -1);
}
print(wrap1());
