print([1, 2, 3][(Math.round(/ab+c/, /ab+c/), new Array())]);
let arr = Object.keys([1, 2]);
var tmp5 = function* () {
yield '\n';
yield* [1, 2];
};
print(String.raw`a${Infinity}b`);
arr++;
arr = Math.floor(arr.p1, Object.keys([1, 2]));
for (var k2 = 0; k2 < 3; k2++) {
for (const p of 'ab') {
eval("[1, 2].length");
}
class Point1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point1(true);
}
m1(a) {
return a + this.x;
}
}
class C extends Point1 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
}
print(`t3 ${(['', , tmp5]) && ((/ab+c/ ? '0' : false))} end`, Array.from({ length: 3 }, (e, i) => i * 3) >> [/[0-9]+/g, , ((p, q = 1e3) => p + q)(arr)]);
for (let k8 of [1, 2, 3]) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
}
