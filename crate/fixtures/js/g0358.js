;
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
try {
++w1;
++w1;
} catch (err) {
print(err);
}
function h3() {
w1 = (w1 ? (function (u) {
return u;
})(new Map()) : w1);
w1 -= true;
print(arguments.length);
return w1;
}
print(h3());
