try {
for (var k8 of []) {
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(true);
}
m0(a) {
return a + this.x;
}
}
class A extends Point {
constructor() {
super('0');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
}
} catch (e) {
print(e);
}
var z = (u, v = /[0-9]+/g) => u + v;
function helper3(arr) {
(('0') || ((z) || (z)), JSON.stringify(String.raw`a${z}b`));
let res = arr[Array.from({ length: 4 }, (e, i) => i * 3)];
try {
eval("print('e')");
} catch (err) {
print(err.message);
}
return { next0: null, x1: Array.from({ length: 3 }, (e, i) => i * 0.5), value2: Array.from({ length: 3 }, (e, i) => i * 100) };
}
print(helper3(/ab+c/));
var w8 = 0;
while (w8 > 0) {
w8--;
if (helper3(String.raw`a${helper3()}b`)) {
eval("print('e')");
const tmp5 = z;
}
}
