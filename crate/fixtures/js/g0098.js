print(Array.from({ length: 3 }, (e, i) => i * 3), (function (u) {
return u;
})(Array.from({ length: 0 }, (e, i) => i * 2) * (function (u) {
return u;
})(null)));
print([((/x/i, /ab+c/), [/x/i, , null]), , [new Error(), , new Map()]], [new Date(1), Array.from({ length: 2 }, (e, i) => i * 3), String.raw`a${[]}b`]);
const c = String(false);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
print('0');
print(/x/i);
eval("1 + 2");
if (c) {
print(undefined);
} else {
if (`t7 ${Object.keys({})} end`) {
var res7 = (new WeakMap() ? Math.abs(`t3 ${c} end`, new Date()) : new WeakMap());
++res7;
var w7 = 3;
while (w7 > 0) {
w7--;
var flag = new WeakMap();
}
}
}
