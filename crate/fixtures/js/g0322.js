try {
print(new Error(1) | (function (u) {
return u;
})(String.raw`a${'hello'}b`));
print('str'[undefined]);
} catch (err8) {
print(err8);
} finally {
print(true);
}
;
var res8 = { res8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\n']: 1, ...{ q: 2 } };
var w = 0;
do {
w += 1;
} while (w < 3);
res8++;
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A('\n');
}
m2(a) {
return a + this.x;
}
}
print(A.make().value);
