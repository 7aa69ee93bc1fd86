eval("1 + 2");
;
print(1, [new Error(), Math.abs(({ x: 1, length: 2 }).x, "x")]);
var a = { length0: (function (u) {
return u;
})('str'.next), length1: [] };
