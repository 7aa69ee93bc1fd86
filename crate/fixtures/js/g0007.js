eval("[1, 2].length");
eval("print('e')");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
function run0() {
if ([new Map(), false]) {
var flag = undefined;
;
}
const x = 255;
if ({ y0: false }) {
print({ next0: typeof (`t8 ${'hello'} end`), prop1: Array.from({ length: 2 }, (e, i) => i * 10), x2: x.x }, `t1 ${(/ab+c/) || ((x) ?? (x))} end`);
} else {
print(x, [...[String.raw`a${JSON.stringify(false)}b`, ((p, q = '') => p + q)(new Set())]]);
}
if (new.target) {
print('ctor');
}
print(arguments.length);
return [(String.raw`a${2}b` ? [1, 2, 3][''] : [/[0-9]+/g, , x]), , Object.keys({})];
}
run0();
print(/[0-9]+/g);
function check() {
var w1 = 1;
while (w1 > 0) {
w1--;
!(JSON.stringify(w1[w1]));
}
w1 -= `t3 ${(((p, q = 0.5) => p + q)(255)) || (w1)} end`;
w1--;
if (new.target) {
print('ctor');
}
return w1[w1[[w1, , '\u0041']]];
}
print(check());
