class Derived0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived0(255);
}
m1(a) {
return a + this.x;
}
}
print(Derived0.make().value);
Derived0 = ['', , JSON.stringify((function (u) {
return u;
})(true))];
for (let p9 of [1, 2, 3]) {
;
}
print((function (u) {
return u;
})([Derived0, Derived0 | /[0-9]+/g]), '\n');
try {
eval("[1, 2].length");
throw new Error('abc');
} catch (ex4) {
print(ex4.message);
}
if (Array.from({ length: 1 }, (e, i) => i * NaN)) {
Derived0 = new WeakMap();
const b = String.raw`a${(Math.sqrt(/ab+c/, 3), (Infinity ? Derived0 : /[0-9]+/g))}b`;
} else {
String.raw`a${{ value0: `t1 ${Derived0} end`, value1: [] }}b`;
for (const k3 of [1, 2, 3]) {
for (var k = 0; k < 2; k++) {
;
debugger;
}
}
}
var key = null;
var { p1: x0 = '\n', ...tail } = { x: 1 };
key = JSON.stringify(new Set());
--Derived0;
++Derived0;
