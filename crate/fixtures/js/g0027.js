var w = 1;
while (w > 0) {
w--;
eval("print('e')");
}
new Array(0);
;
function compute() {
var b4 = new Date();
return String({ p10: new WeakMap(), value1: Math.max(NaN, w), x2: w });
}
print(compute());
w++;
var w10 = 1;
while (w10 > 0) {
w10--;
print(([(w) ?? (w10), (w ? 'a,b,c' : w10)] ? new WeakMap() : /[0-9]+/g ^ String(w)), w);
}
class Box5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box5(2);
}
m2(a) {
return a + this.x;
}
}
class B8 extends Box5 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B8().value);
w10 = Math.max(compute(), ({ value0: Box5, p01: B8, value2: w10 }) ?? (B8[w10]));
var tmp8 = async function () {
return await '\u0041';
};
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
