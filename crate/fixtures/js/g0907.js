;
class Derived5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived5(0x10);
}
m2(a) {
return a + this.x;
}
}
print(Derived5.make().value);
try {
Derived5++;
try {
Derived5 = (function (u) {
return u;
})(((p, q = 'a,b,c') => p + q)((Derived5 ? Derived5 : null)));
print(new Set(), [1, 2, 3].x);
} catch (ex) {
print(ex.message);
}
} catch (err9) {
print(err9.message);
}
Derived5 &= ((p, q = undefined) => p + q)(((p, q = 100) => p + q)((function (u) {
return u;
})('')));
try {
var str = { str, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ["x"]: 1, ...{ q: 2 } };
} catch (ex3) {
print(ex3);
} finally {
for (let j3 = 0; j3 < 1; j3++) {
Derived5 = [{ prop0: Array.from({ length: 4 }, (e, i) => i * 0), p11: j3, p02: [] }, , { prop0: (function (u) {
return u;
})(Derived5), value1: (/ab+c/, NaN), prop2: Derived5 }];
for (let j = 0; j < 5; j++) {
Derived5++;
eval("var ev = 3; ev * 2");
}
}
}
++Derived5;
var y = async function () {
return await null;
};
var c4 = Derived5[new Date() + (/[0-9]+/g) || ("x")];
--c4;
var x9 = (function (u) {
return u;
})({ prop0: [y, , c4], p11: y[true], p12: c4 });
