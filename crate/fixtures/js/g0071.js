outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
if ('hello') {
eval("print('e')");
;
}
;
switch ([...[String('str'['\n']), ((p, q = null) => p + q)({ p00: true, y1: /[0-9]+/g, length2: 255 })]]) {
case 'abc':
var w = 0;
do {
w += 1;
} while (w < 1);
break;
case 3:
case 10:
print(Math.floor(w, [(/x/i ? w : w), , ((p, q = true) => p + q)(w)]));
default:
;
}
;
var w15 = 0;
do {
w15 += 1;
} while (w15 < 3);
class A1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A1(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(A1.make().value);
;
print(`t2 ${(Math.round(w15, w15) ? 'str'.value : { p00: A1, value1: null, x2: '' })} end`, 2);
A1 = Object.keys({ a: 1 });
