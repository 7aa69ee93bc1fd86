print(new Array());
var { next: b3 = 'abc', ...rest } = { x: 1 };
;
eval("print('e')");
b3 -= [`t8 ${`t7 ${b3} end`} end`, false];
var w5 = 0;
do {
w5 += 1;
} while (w5 < 1);
w5 *= (function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * 1)) == Object.keys({});
++w5;
