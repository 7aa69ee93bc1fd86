function test1(val1) {
/ab+c/;
print(arguments.length);
return ((('hello' ? val1 : null) ? val1 : Object.keys({ a: 1 })) ? JSON.stringify((false ? 255 : val1)) : [1, 2, 3][`t8 ${val1} end`]);
}
print(test1(NaN));
var w0 = 0;
while (w0 > 0) {
w0--;
w0 += test1(w0, Array.from({ length: 4 }, (e, i) => i * 0)) > String.raw`a${String.raw`a${3}b`}b`;
}
;
w0;
print((function (u) {
return u;
})(String.raw`a${Object.keys({ a: 1 })}b`));
w0++;
w0 = JSON.stringify([Array.from({ length: 0 }, (e, i) => i * 255), Math.min('', w0)]);
;
