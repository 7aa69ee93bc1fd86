print(/ab+c/);
;
switch ((Math.floor((/[0-9]+/g, /[0-9]+/g), String(undefined)), 'a,b,c' === /ab+c/ === ('0') ?? (/x/i))) {
case null:
var c3 = Array.from({ length: 1 }, (e, i) => i * 2) >> 'str'.p1;
break;
case false:
case undefined:
print(Array.from({ length: 0 }, (e, i) => i * 1e3), c3);
default:
c3++;
}
try {
print((function (u) {
return u;
})((function (u) {
return u;
})([undefined, , "x"])), (1e3, (('a,b,c' ? 0x10 : 'abc')) && (/ab+c/)));
throw new Error('\u0041');
} catch (ex5) {
print(ex5);
} finally {
print(100);
}
