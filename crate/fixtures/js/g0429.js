try {
try {
var w6 = 0;
do {
w6 += 1;
} while (w6 < 2);
} catch (e9) {
print(e9.message);
}
var w = 0;
do {
w += 1;
} while (w < 1);
throw new RangeError('abc');
} catch (e) {
print(e.message);
}
print('0');
;
try {
try {
;
} catch (err) {
print(err.message);
} finally {
;
}
;
throw new Error('');
} catch (e1) {
print(e1.message);
} finally {
print(0x10);
}
(function (u) {
return u;
})(JSON.stringify(String('hello')));
print(Math.abs(/x/i, (function (u) {
return u;
})(String.raw`a${"x"}b`)), [...[Math.min(undefined, "x"), String(Infinity)]] !== Object.keys([1, 2]) + { length0: 'hello' });
for (let k8 = 0; k8 < 2; k8++) {
var res5 = (String((null) ?? (k8)), Math.min(k8, [...[1, true]]));
var w0 = 2;
while (w0 > 0) {
w0--;
var data = Math.abs(res5, `t8 ${res5} end`);
}
}
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class A extends C9 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
var y5 = { A, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
Object.keys([1, 2]);
