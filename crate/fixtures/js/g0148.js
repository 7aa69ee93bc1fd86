if ((new Map() ? Object.keys({ a: 1 }) : (`t4 ${undefined} end`) || ([/ab+c/, "x", undefined]))) {
print(1);
String('0');
}
;
{
print(2);
}
print((-(null) ? { y0: Math.min(/x/i, null) } : 0x10), JSON.stringify((`t4 ${undefined} end`, "x")));
/x/i;
print(undefined);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
var x = function* () {
yield false;
yield* [1, 2];
};
x = new WeakMap();
