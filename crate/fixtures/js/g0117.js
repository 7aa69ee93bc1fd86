print(({ x: 1, length: 2 })[(10) || (Array.from({ length: 4 }, (e, i) => i * 1))]);
if (Array.from({ length: 4 }, (e, i) => i * -1)) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
for (var p9 of [1, 2, 3]) {
;
}
var w = 1;
while (w > 0) {
w--;
for (var i = 0; i < 1; i++) {
w *= i;
Array.from({ length: 1 }, (e, i) => i * NaN);
}
}
} else {
;
}
new Error();
if ([1, 2, 3][Object.keys({ a: 1 })]) {
var n9 = async function () {
return await /x/i;
};
print([...[Object.keys({ a: 1 }), n9]], String(String(undefined) === /x/i));
}
print(new WeakMap(), Object.keys([1, 2]));
