try {
print(String.raw`a${((null, '\n'), (function (u) {
return u;
})(/[0-9]+/g))}b`);
var w3 = 0;
do {
w3 += 1;
} while (w3 < 1);
} catch (e7) {
print(e7.message);
} finally {
({ x0: '0', value1: [1, 2, 3].next });
}
class Box3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box3(Infinity);
}
m0(a) {
return a + this.x;
}
}
class C8 extends Box3 {
constructor() {
super(false);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C8().value);
try {
C8 = [];
} catch (err2) {
print(err2.message);
}
var str = (u, v = '\n') => u + v;
var flag4 = { Box3, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
++flag4;
((p, q = 255) => p + q)(C8.next);
str *= JSON.stringify(((str) || (10), -(/x/i)));
