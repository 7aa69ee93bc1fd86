class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(0.5);
}
m1(a) {
return a + this.x;
}
}
print(Point.make().value);
if (Point.p0) {
;
} else {
try {
eval("var ev = 3; ev * 2");
;
throw new RangeError('hello');
} catch (e) {
print(e);
}
}
print(Object.keys({ a: 1 }));
Point += new Object();
print(Array.from({ length: 2 }, (e, i) => i * 0), '0');
Point = `t1 ${new Object(1)} end`;
Point += new Map();
