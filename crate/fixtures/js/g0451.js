print((function (u) {
return u;
})([]));
print(new Array(), NaN);
eval("var ev = 3; ev * 2");
print(Math.floor(new Date(1), (/x/i) || ('\n')) + [true, , String(/ab+c/)]);
;
;
;
print(/[0-9]+/g);
