for (var j = 0; j < 4; j++) {
print(Array.from({ length: 3 }, (e, i) => i * 100), String(String.raw`a${`t4 ${j} end`}b`));
var tmp4 = function* () {
yield false;
yield* [1, 2];
};
}
print(`t4 ${[Math.sqrt(1e3, /x/i), , [1, 2, 3][/[0-9]+/g]]} end`);
print(true);
;
{
try {
[1, 2, 3].p0;
throw new RangeError('\u0041');
} catch (e4) {
print(e4);
}
;
}
eval("[1, 2].length");
function f0(n9) {
for (var k in { a: 1, b: 2 }) {
n9 = +([...[Object.keys({}), (n9, n9)]]);
}
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
return false;
}
f0(NaN);
class Box8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box8(1);
}
m2(a) {
return a + this.x;
}
}
class B extends Box8 {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B().value);
var count = u => {
return u;
};
eval("[1, 2].length");
String.raw`a${~(String.raw`a${Box8}b`)}b`;
