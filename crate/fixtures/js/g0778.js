if (`t2 ${Object.keys({})} end`) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
;
if ([new Object(1), , null]) {
({ length0: /x/i, p11: (new Array(0) ? (100, Infinity) : Math.pow('', /ab+c/)), x2: new Error(10) });
print(String(Object.keys([1, 2])));
} else {
function test6(flag3) {
++flag3;
if (new.target) {
print('ctor');
}
print(arguments.length);
return !(String.raw`a${flag3}b`);
}
print(test6(false));
print(10);
}
}
`t0 ${Object.keys({ a: 1 })} end`;
;
function check1(acc, a) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break;
}
}
return /ab+c/;
}
print(check1('abc', null));
;
