print(/ab+c/);
var m5 = [(new WeakMap() ? (Infinity, '0') : String.raw`a${false}b`), , true > Array.from({ length: 1 }, (e, i) => i * 0x10)];
m5--;
for (const k in [1, 2]) {
{
function wrap(arr, tmp) {
print([(arr) && (k), , (new Date()) ?? ('')]);
tmp += { p00: /x/i };
;
return [...[null, [...[tmp, { prop0: /ab+c/, p11: false }]]]];
}
print(wrap('\u0041', /x/i));
try {
m5 &= m5;
} catch (ex) {
print(ex.message);
} finally {
wrap((({ x: 1, length: 2 }).next ? String.raw`a${true}b` : String('a,b,c')));
}
}
}
print(0.5);
{
m5 <<= new Set();
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
print(A.make().value);
}
{
eval("var ev = 3; ev * 2");
}
m5++;
