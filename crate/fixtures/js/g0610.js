outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
if (new Object(0)) {
;
} else {
var w = 0;
do {
w += 1;
} while (w < 1);
}
{
eval("print('e')");
}
print(null);
for (var k1 in [1, 2]) {
var z5 = JSON.stringify(Object.keys([1, 2]));
}
[...[{ length0: JSON.stringify('a,b,c'), length1: (Infinity ? '\u0041' : 1), value2: Object.keys([1, 2]) }, `t3 ${JSON.stringify(/[0-9]+/g)} end`]];
