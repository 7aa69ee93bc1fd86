print(/[0-9]+/g);
var a1 = `t2 ${((function (u) {
return u;
})(true) ? Object.keys([1, 2]) : ({ x: 1, length: 2 })['a,b,c'])} end`;
`t0 ${`t0 ${{ length0: NaN, prop1: a1 }} end`} end`;
var w8 = 0;
do {
w8 += 1;
} while (w8 < 4);
