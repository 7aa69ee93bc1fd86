var w2 = 0;
do {
w2 += 1;
} while (w2 < 1);
print(String.raw`a${([...[undefined, w2]] ? w2 >> w2 : (/ab+c/) && (/x/i))}b`);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
--w2;
w2 = ([...[(/[0-9]+/g, w2), (w2 ? w2 : /ab+c/)]], ((w2) && (w2), [/x/i]));
w2 += w2[String(new Error())];
w2++;
w2++;
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
class Derived6 extends Point {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Derived6().value);
