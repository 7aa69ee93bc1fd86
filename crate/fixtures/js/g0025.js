print(`t8 ${[1, 2, 3][[Infinity]]} end`, /[0-9]+/g);
new Map();
;
var w4 = 3;
while (w4 > 0) {
w4--;
for (var j = 0; j < 1; j++) {
debugger;
var a3 = async function () {
return await '\u0041';
};
}
}
if (Object.keys([1, 2])) {
if ("x") {
;
var w = 0;
do {
w += 1;
} while (w < 2);
print([], [...[String(String(w4)), [...[Object.keys({ a: 1 }), [w4, , w]]]]]);
} else {
{
eval("[1, 2].length");
;
}
switch ([{ y0: [...[null, 'a,b,c']], length1: [] }, new Error(1)]) {
case /x/i:
w4 = [w4, , Array.from({ length: 0 }, (e, i) => i * 0x10) | new Date(1)];
break;
case 'a,b,c':
case /[0-9]+/g:
eval("var ev = 3; ev * 2");
default:
--w4;
}
}
print((('') ?? (new Date(1)) ? -(w4) : Array.from({ length: 2 }, (e, i) => i * 0)));
var w14 = 0;
while (w14 > 0) {
w14--;
w14 = [];
}
} else {
w4 = String(`t7 ${{ value0: w4, length1: undefined, length2: w4 }} end`);
--w4;
}
w4--;
eval("1 + 2");
switch ((['str'.p1, , { value0: null, p11: w4 }]) || (true)) {
case '0':
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
break;
case null:
case /[0-9]+/g:
debugger;
default:
w4 |= { x0: ((p, q = true) => p + q)([...[w4, w4]]) };
}
print((Array.from({ length: 4 }, (e, i) => i * 0x10)) || (new Date()));
