const key = null;
function f(n8, str6) {
str6--;
if (new.target) {
print('ctor');
}
return str6;
}
print(f(/[0-9]+/g, 2));
print(1);
;
try {
for (const p3 in [1, 2]) {
print(f(((p, q = '\n') => p + q)((function (u) {
return u;
})(p3)), String(key !== true)));
}
} catch (e) {
print(e.message);
}
eval("var ev = 3; ev * 2");
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
class Derived8 extends Base {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived8().value);
eval("var ev = 3; ev * 2");
let data = (((p, q = null) => p + q)([...[key, /ab+c/]]), [key, , key]);
if (((function (u) {
return u;
})(Math.round(Base, true))) && (Array.from({ length: 4 }, (e, i) => i * 0x10))) {
if (Object.keys([1, 2])) {
var x = async function () {
return await undefined;
};
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
} else {
data = key;
}
