print(/x/i);
for (var i = 0; i < 2; i++) {
let arr = String((typeof (i) ? i.x : String(i)));
var acc2 = i;
}
;
;
print('str'[(true ? /x/i : /x/i)] !== new WeakMap());
print(String(('hello' >> '') && (String(true))));
if ("x") {
var m = ({ x: 1, length: 2 }).p0;
{
class B4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B4(true);
}
m1(a) {
return a + this.x;
}
}
print(B4.make().value);
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/x/i);
}
m1(a) {
return a + this.x;
}
}
class C extends Base {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
}
class Base8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base8(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
print(Base8.make().value);
} else {
;
switch (new Date()) {
case undefined:
;
break;
case 0x10:
case '\n':
;
default:
print(Array.from({ length: 1 }, (e, i) => i * 0));
}
}
print(2);
for (let k3 of []) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
}
}
print(String.raw`a${100}b`, (String.raw`a${'abc'}b` ? [({ x: 1, length: 2 })[255], "x"] : [Object.keys({}), , true]));
