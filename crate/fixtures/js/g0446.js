(function (u) {
return u;
})(Math.min(new Map(), [1, 2, 3].p1));
;
print(false);
for (var i0 = 0; i0 < 5; i0++) {
var w = 0;
do {
w += 1;
} while (w < 1);
for (let p in [1, 2]) {
i0--;
}
}
