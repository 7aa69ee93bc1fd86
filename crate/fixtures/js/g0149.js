;
if (Object.keys([1, 2])) {
;
let x1 = ((p, q = /[0-9]+/g) => p + q)(new Error());
{
x1 = 100;
try {
(function (u) {
return u;
})(/ab+c/);
x1 |= -(x1);
throw new RangeError('a,b,c');
} catch (e) {
print(e);
} finally {
eval("[1, 2].length");
}
}
}
;
function check4(tmp, flag) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(true);
}
m0(a) {
return a + this.x;
}
}
print(C.make().value);
if (new.target) {
print('ctor');
}
return ((p, q = 1e3) => p + q)(((p, q = -1) => p + q)(Object.keys([1, 2])));
}
print(check4(100, /x/i));
