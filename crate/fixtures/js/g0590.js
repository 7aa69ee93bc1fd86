for (var k2 of [1, 2, 3]) {
const c5 = ((p, q = false) => p + q)((function (u) {
return u;
})({ value0: k2, value1: k2, next2: k2 }));
}
`t6 ${Infinity} end`;
try {
print(undefined);
;
} catch (err) {
print(err.message);
}
print(['', , 'abc'], -1);
;
try {
eval("var ev = 3; ev * 2");
throw new RangeError('');
} catch (ex1) {
print(ex1);
}
print((true ^ [undefined, false, /[0-9]+/g], [[Infinity, , /ab+c/], , String(/[0-9]+/g)]), { length0: JSON.stringify((function (u) {
return u;
})('\u0041')) });
var val6 = function* () {
yield 'a,b,c';
yield* [1, 2];
};
