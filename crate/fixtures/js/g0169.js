outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
;
;
;
var key0 = (u, v = 100) => u + v;
print(key0[(/[0-9]+/g ? { x0: 10, length1: key0, value2: key0 } : `t8 ${'\n'} end`)], { value0: { y0: Object.keys([1, 2]) }, value1: `t4 ${((p, q = '\n') => p + q)(key0)} end`, next2: key0 });
function compute9(acc) {
function make4(res) {
print(res[(res.prop, [...[res, NaN]])]);
print({ prop0: key0 }, new Object());
eval("[1, 2].length");
if (new.target) {
print('ctor');
}
return JSON.stringify(/[0-9]+/g);
}
print(make4(100));
return [...[{ prop0: String.raw`a${/ab+c/}b`, value1: new Set() }, String.raw`a${['abc', key0, key0]}b`]];
}
print(compute9('hello'));
eval("print('e')");
var w7 = 0;
do {
w7 += 1;
} while (w7 < 2);
w7 = String.raw`a${typeof (new Object())}b`;
