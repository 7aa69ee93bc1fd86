print({ x0: [1, 2, 3][[1, 2, 3].p1], length1: ({ x: 1, length: 2 }).length, length2: [{ prop0: null }, , ((p, q = false) => p + q)(undefined)] });
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(1);
}
m2(a) {
return a + this.x;
}
}
class B9 extends Derived {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B9().value);
eval("var ev = 3; ev * 2");
{
;
var count4 = u => {
return u;
};
}
for (let k = 0; k < 3; k++) {
;
function test8(y0, m) {
++Derived;
-(-(Object.keys([1, 2])));
return [{ next0: JSON.stringify(k) }, , ('\n') ?? (false)];
}
print(test8('\u0041', undefined));
}
B9 = Array.from({ length: 3 }, (e, i) => i * Infinity);
B9 = (!(String(B9)) ? Math.max((function (u) {
return u;
})(100), (B9 ? B9 : B9)) : { value0: new Map() });
++Derived;
for (let p of []) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
}
var z = (String((function (u) {
return u;
})(/ab+c/))) && (String.raw`a${(/x/i, Derived)}b`);
