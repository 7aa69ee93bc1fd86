try {
var item8 = 1;
for (let k5 of 'ab') {
function make() {
;
debugger;
print(arguments.length);
return Math.round(k5[k5 === item8], (new Set()) ?? ([...[item8, k5]]));
}
make();
}
throw new Error('abc');
} catch (ex) {
print(ex.message);
}
eval("[1, 2].length");
eval("[1, 2].length");
function f5(y9) {
eval("1 + 2");
--y9;
y9++;
return ((function (u) {
return u;
})(y9) + `t0 ${y9} end`, y9);
}
print(f5(false));
;
print((function (u) {
return u;
})(((p, q = null) => p + q)(true)));
var w0 = 1;
while (w0 > 0) {
w0--;
let str4 = w0;
}
print([f5(`t8 ${w0} end`), , String((function (u) {
return u;
})(w0))]);
for (let k = 0; k < 4; k++) {
;
for (var j0 = 0; j0 < 5; j0++) {
w0--;
'str'[[...[Object.keys({ a: 1 }), Object.keys([1, 2])]]];
}
}
for (const p3 in [1, 2]) {
class A4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A4(Infinity);
}
m0(a) {
return a + this.x;
}
}
print(A4.make().value);
}
print(-(w0));
