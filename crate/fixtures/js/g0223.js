;
;
var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
const key8 = w4.p0;
;
w4 &= JSON.stringify({ next0: ('') || (3), next1: String.raw`a${w4}b` });
Math.min([...[key8, { value0: w4, prop1: /ab+c/ }]], ({ x: 1, length: 2 })[{ prop0: w4, y1: key8 }]);
var w6 = 0;
do {
w6 += 1;
} while (w6 < 2);
if (/x/i) {
if (String.raw`a${((p, q = 1) => p + q)(JSON.stringify(key8))}b`) {
function compute() {
w6 -= [(new Error(10), +('hello')), , ((function (u) {
return u;
})(key8), String(/x/i))];
if (new.target) {
print('ctor');
}
return ({ x: 1, length: 2 })[[({ x: 1, length: 2 })[w4], , (w6 ? 0.5 : /x/i)]];
}
print(compute());
w4;
} else {
--w6;
}
} else {
w6 = void (`t7 ${(1e3) || (w6)} end`);
var [res4, , ...rest1] = ['hello', 2, 3];
}
String.raw`a${'0'}b`;
