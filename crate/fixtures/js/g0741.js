print('str'[null], typeof (false));
var tmp7 = (u, v = /x/i) => u + v;
const obj5 = [...[String.raw`a${[tmp7, , '']}b`, new Map()]];
obj5.x;
for (let p2 in [1, 2]) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
}
for (var i = 0; i < 1; i++) {
tmp7++;
print(new Map());
}
try {
tmp7 = ((p, q = 'hello') => p + q)(JSON.stringify(Object.keys({ a: 1 })));
;
} catch (ex7) {
print(ex7.message);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
debugger;
if ([...[(function (u) {
return u;
})({ p10: /x/i, next1: 3 }), 'a,b,c']]) {
var w5 = 0;
do {
w5 += 1;
} while (w5 < 2);
} else {
tmp7 = tmp7;
var data5 = function* () {
yield /ab+c/;
yield* [1, 2];
};
}
if (JSON.stringify(([1, 2, 3][1], [3, tmp7, obj5]))) {
tmp7--;
3;
;
}
