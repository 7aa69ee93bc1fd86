function make() {
;
var w2 = 0;
do {
w2 += 1;
} while (w2 < 4);
return [[...[1e3, `t2 ${/[0-9]+/g} end`]], , [Object.keys([1, 2]), , ("x" ? w2 : false)]];
}
print(make());
for (var p7 of 'ab') {
p7++;
}
;
print(Object.keys({}));
var w = 2;
while (w > 0) {
w--;
((p, q = /ab+c/) => p + q)("x");
}
;
w--;
++w;
void (+(w) ^ Math.pow(w, "x"));
var w5 = 3;
while (w5 > 0) {
w5--;
make();
}
