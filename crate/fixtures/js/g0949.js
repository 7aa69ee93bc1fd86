print(({ x: 1, length: 2 }).x);
"x";
;
print(undefined);
var z = ([1, 2, 3][true]) ?? ('\n' ^ [...['abc', NaN]]);
