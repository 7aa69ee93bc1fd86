for (var k of 'ab') {
++k;
}
print(undefined);
for (let i4 = 0; i4 < 3; i4++) {
i4++;
try {
print(/[0-9]+/g);
throw new Error('0');
} catch (e5) {
print(e5);
}
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
print(new Set());
print(/x/i);
function helper2(key5, b0) {
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(true);
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
for (var j = 0; j < 1; j++) {
Object.keys({ a: 1 });
b0 *= ((p, q = /ab+c/) => p + q)(key5);
}
print(arguments.length);
return `t2 ${b0.y} end`;
}
print(helper2('\u0041', /x/i));
switch (!(((p, q = '') => p + q)(Array.from({ length: 4 }, (e, i) => i * 0x10)))) {
case null:
;
break;
case /x/i:
case '\n':
print((function (u) {
return u;
})(false));
default:
print((String.raw`a${String(10)}b`, [1, 2, 3][`t1 ${/x/i} end`]));
}
