print(undefined);
print([...[`t5 ${Object.keys({ a: 1 })} end`, String(Math.sqrt(1e3, "x"))]], -1);
;
switch ((function (u) {
return u;
})(({ x: 1, length: 2 })[(1) || (undefined)])) {
case 'a,b,c':
print(2);
break;
case /ab+c/:
case undefined:
print("x");
default:
;
}
var res2 = { res2, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['abc']: 1, ...{ q: 2 } };
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived('hello');
}
m0(a) {
return a + this.x;
}
}
print(Derived.make().value);
;
eval("[1, 2].length");
switch (String(false)) {
case 3:
Derived = Math.floor(((p, q = 100) => p + q)(res2[undefined]), [...[new Map(), String.raw`a${0.5}b`]]);
break;
case '\n':
case '':
Derived = (String((res2 ? undefined : 1))) && ([] % [...[res2, res2]]);
default:
Derived++;
}
let a9 = Array.from({ length: 0 }, (e, i) => i * NaN);
