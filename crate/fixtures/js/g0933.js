;
print('0');
print((function (u) {
return u;
})(new Set()), ~(({ x: 1, length: 2 }).prop));
var w = 2;
while (w > 0) {
w--;
w++;
}
