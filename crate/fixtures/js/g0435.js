for (var j = 0; j < 3; j++) {
for (var p of [1, 2, 3]) {
eval("1 + 2");
}
;
}
print([...[new Set(), { next0: ({ x: 1, length: 2 }).next, p01: { value0: '0', length1: /ab+c/, y2: true }, x2: (/ab+c/) ?? ('hello') }]], String(new Error()));
`t0 ${new Set()} end`;
switch (Array.from({ length: 1 }, (e, i) => i * -1)) {
case 'hello':
var w7 = 1;
while (w7 > 0) {
w7--;
w7++;
}
break;
case 'a,b,c':
case /[0-9]+/g:
;
default:
const val = new WeakMap();
}
try {
var w = 0;
do {
w += 1;
} while (w < 2);
throw new Error('\u0041');
} catch (e) {
print(e.message);
}
;
3;
var x0 = function* () {
yield "x";
yield* [1, 2];
};
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
switch (((p, q = null) => p + q)(Math.floor((true) ?? (x0), [x0, , -1]))) {
case null:
let str = x0;
break;
case /ab+c/:
case 1:
print(str);
default:
;
}
