switch (new WeakMap()) {
case /ab+c/:
let obj = [Math.round([1, 2, 3][0], Math.pow(undefined, '0')), new Date()];
break;
case undefined:
case true:
print([`t2 ${obj} end`, , (Array.from({ length: 3 }, (e, i) => i * Infinity)) || (new Object(0))], [('abc' ? true : 2) >>> [obj, , obj], (Math.pow(obj, obj), `t5 ${obj} end`), obj[obj * undefined]]);
default:
var x = ((p, q = undefined) => p + q)(Object.keys([1, 2]));
}
var w = 0;
do {
w += 1;
} while (w < 4);
w *= 2;
for (var i4 = 0; i4 < 1; i4++) {
switch (String.raw`a${`t0 ${w} end`}b`) {
case /[0-9]+/g:
class Point4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point4("x");
}
m2(a) {
return a + this.x;
}
}
print(Point4.make().value);
break;
case /[0-9]+/g:
case /[0-9]+/g:
print(Point4.value);
default:
print((function (u) {
return u;
})([w, , Object.keys({ a: 1 })]), (function (u) {
return u;
})([3, , { x0: /[0-9]+/g }]));
}
;
}
var y = JSON.stringify(String.raw`a${String(w)}b`);
eval("1 + 2");
