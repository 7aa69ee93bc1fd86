var [val, , ...tail] = ['abc', 2, 3];
--val;
val = Object.keys({});
val++;
val &= String.raw`a${String(Math.pow(val, val))}b`;
for (let i = 0; i < 3; i++) {
print(String.raw`a${(val[2] ? /[0-9]+/g : ((p, q = 'abc') => p + q)(val))}b`, /x/i);
function h(str, arr) {
arr *= [((p, q = /ab+c/) => p + q)((arr, 0x10)), Math.pow(str[0x10], ('0' ? val : val)), '\u0041' / -1];
if (new.target) {
print('ctor');
}
return { prop0: arr };
}
h("x", null);
}
--val;
const z = new Array();
const b = { x0: Object.keys({ a: 1 }) & z[1], value1: Math.round(JSON.stringify(z), String.raw`a${val}b`) };
val++;
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(/x/i);
}
m1(a) {
return a + this.x;
}
}
print(Derived.make().value);
