;
for (let p1 of []) {
if (((p, q = 100) => p + q)((p1) ?? (Object.keys({})))) {
print(p1, (p1, [(p1, 100)]));
var flag3 = { flag3, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
switch (p1) {
case true:
print(p1, { y0: [], next1: [...[[...[p1, flag3]], [...[flag3, null]]]] });
break;
case 3:
case undefined:
flag3 <<= [Math.round(false, new Array()), !(JSON.stringify(0x10))];
default:
p1 = typeof (Math.abs(flag3.y, new Object()));
}
}
}
print([((p, q = 10) => p + q)(Array.from({ length: 3 }, (e, i) => i * 0)), , [Infinity, , 0.5] <= (/ab+c/ ? /x/i : 0.5)]);
class Derived7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived7(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Derived7.make().value);
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
Derived7--;
