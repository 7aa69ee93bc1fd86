;
;
eval("var ev = 3; ev * 2");
var w = 0;
while (w > 0) {
w--;
for (var j5 = 0; j5 < 4; j5++) {
{
print(String(Array.from({ length: 2 }, (e, i) => i * NaN)), JSON.stringify(null));
print(j5);
}
--j5;
}
}
print((function (u) {
return u;
})((`t1 ${NaN} end`) ?? (Math.min(w, w))));
