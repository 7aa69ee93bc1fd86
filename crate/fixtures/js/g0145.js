switch ([]) {
case /[0-9]+/g:
var n2 = function (...u) {
return u.length;
};
break;
case true:
case false:
var count = JSON.stringify(`t7 ${String(n2)} end`);
default:
n2 *= new Error(0);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
;
for (let i = 0; i < 5; i++) {
;
i += [((null ? /ab+c/ : 100)) || (new Date(10)), , Math.sqrt(void (i), i)];
}
try {
var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
throw new RangeError('\u0041');
} catch (ex0) {
print(ex0);
}
try {
try {
if (((p, q = 0) => p + q)(String(undefined) >>> [...[undefined, 'abc']])) {
print(2);
Array.from({ length: 2 }, (e, i) => i * 2);
print(-([...[Math.abs(/x/i, undefined), void ('\n')]]));
} else {
print(1e3);
;
}
throw new Error('a,b,c');
} catch (err) {
print(err.message);
} finally {
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(undefined);
}
m1(a) {
return a + this.x;
}
}
class C extends A {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
}
throw new TypeError('0');
} catch (ex6) {
print(ex6);
}
eval("1 + 2");
var w = 0;
do {
w += 1;
} while (w < 1);
--w;
w = (function (u) {
return u;
})(Array.from({ length: 3 }, (e, i) => i * 0x10));
