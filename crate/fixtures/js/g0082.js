try {
try {
try {
print(new Map(), (String.raw`a${(/ab+c/, /[0-9]+/g)}b`) || ('str'.value));
print([String(false) << { length0: /[0-9]+/g }, , 2]);
} catch (ex) {
print(ex);
}
;
} catch (e) {
print(e.message);
}
({ x: 1, length: 2 })["x"];
throw new Error('\n');
} catch (ex4) {
print(ex4);
} finally {
try {
new Object();
function f(m) {
++m;
m &= (/x/i ? m[(m) || (undefined)] : (function (u) {
return u;
})((/[0-9]+/g, null)));
print(arguments.length);
return ((('a,b,c', /ab+c/) ? new Array() : [...['', 'abc']]), new Map());
}
print(f('abc'));
} catch (err3) {
print(err3);
}
}
class Point2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point2(true);
}
m1(a) {
return a + this.x;
}
}
class A5 extends Point2 {
constructor() {
super(/[0-9]+/g);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A5().value);
Point2--;
class Point4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point4('\n');
}
m2(a) {
return a + this.x;
}
}
class C extends Point4 {
constructor() {
super("x");
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
true;
;
eval("[1, 2].length");
debugger;
--C;
eval("[1, 2].length");
