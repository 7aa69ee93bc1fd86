print('');
;
print("x");
try {
print('hello');
const count = Array.from({ length: 2 }, (e, i) => i * 2);
} catch (ex) {
print(ex);
}
print(0.5);
print(NaN);
var w4 = 2;
while (w4 > 0) {
w4--;
eval("1 + 2");
}
var key5 = ([1, 2, 3].value) || ((function (u) {
return u;
})([2, w4, w4]));
