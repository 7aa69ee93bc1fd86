print([1, 2, 3].length);
[1, 2, 3]['str'.next];
;
var item3 = +(Math.round(2, (function (u) {
return u;
})(null)));
item3 <<= -((item3) || (item3) > Array.from({ length: 4 }, (e, i) => i * 100));
item3--;
var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
w4--;
