;
;
print(255);
Math.abs(((p, q = /[0-9]+/g) => p + q)('hello'), null);
eval("1 + 2");
print(null);
print(2);
var item = +(((p, q = 100) => p + q)('' * 255));
item--;
