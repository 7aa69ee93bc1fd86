function compute(a, tmp2) {
tmp2 = (function (u) {
return u;
})(a);
(function (u) {
return u;
})(new Map());
var item = function* () {
yield 'abc';
yield* [1, 2];
};
if (new.target) {
print('ctor');
}
print(arguments.length);
return (item ? ((0.5) || (1e3), (item) && (true)) : String(Array.from({ length: 1 }, (e, i) => i * 3)));
}
print(compute(null, '0'));
`t3 ${((p, q = /[0-9]+/g) => p + q)(new Set())} end`;
const y = true;
print(0);
;
print(NaN);
if (new Array()) {
var w = 0;
do {
w += 1;
} while (w < 3);
} else {
switch (([...[new Map(), { y0: '', next1: y }]]) || (String.raw`a${new WeakMap()}b`)) {
case 0.5:
try {
print(null);
throw new TypeError('\u0041');
} catch (e) {
print(e);
}
break;
case 'abc':
case /ab+c/:
print(255);
default:
;
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
}
