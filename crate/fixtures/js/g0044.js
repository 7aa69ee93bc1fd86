for (var j2 = 0; j2 < 4; j2++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue outer;
}
}
j2++;
}
class Point0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point0(null);
}
m1(a) {
return a + this.x;
}
}
class Box1 extends Point0 {
constructor() {
super('\n');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box1().value);
Box1 |= true;
;
switch ({ p10: Point0, prop1: Point0.x }) {
case 3:
try {
var w = 1;
while (w > 0) {
w--;
print(String.raw`a${(Box1[/x/i], (0) ?? (Point0))}b`, [[(w, Infinity), , Array.from({ length: 4 }, (e, i) => i * 3)], , Array.from({ length: 4 }, (e, i) => i * 3)]);
}
;
} catch (ex3) {
print(ex3.message);
}
break;
case /x/i:
case /x/i:
eval("var ev = 3; ev * 2");
default:
--Box1;
}
let key = !(Math.min(('\u0041') && (null), { y0: undefined, next1: Box1 }));
print(void (((p, q = 'hello') => p + q)(Math.pow(Box1, key))));
for (let k2 in [1, 2]) {
if ((k2, k2)) {
let c = ({ x0: Array.from({ length: 4 }, (e, i) => i * 255) } ? String.raw`a${[Point0, , /x/i]}b` : (function (u) {
return u;
})((true ? /ab+c/ : 3)));
try {
++Point0;
throw new RangeError("x");
} catch (err) {
print(err.message);
}
print([1, 2, 3].p1, String([...[c.value, (c ? NaN : c)]]));
} else {
print(((p, q = /ab+c/) => p + q)((typeof ('0'), { prop0: k2 })));
{
Box1--;
[1e3, Object.keys({ a: 1 }), ([key, k2]) && (key[undefined])];
}
}
}
print([(Math.max(key, Box1), String(3))]);
--Box1;
eval("print('e')");
