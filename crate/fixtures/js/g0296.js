;
print(10);
print(['str'.next, , [new Set(), JSON.stringify(NaN)]]);
debugger;
eval("var ev = 3; ev * 2");
for (var i9 = 0; i9 < 2; i9++) {
print(Array.from({ length: 3 }, (e, i) => i * 2), ((Math.max("x", '\u0041') ? (i9, i9) : i9)) && ((i9 ? i9 : ((p, q = /ab+c/) => p + q)(i9))));
var n2 = async function () {
return await true;
};
}
for (let i8 = 0; i8 < 3; i8++) {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
--i8;
}
;
