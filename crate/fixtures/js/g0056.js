print(JSON.stringify(('str'.y ? [...[0.5, Infinity]] : Math.floor('abc', 100))));
function wrap() {
if (String(Math.sqrt((/ab+c/ ? /[0-9]+/g : null), 'str'.next))) {
print(0x10);
;
String.raw`a${new Set()}b`;
} else {
print(null);
print(null);
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(true);
}
m0(a) {
return a + this.x;
}
}
class C extends Box {
constructor() {
super('hello');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C().value);
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) break outer;
}
}
if (new.target) {
print('ctor');
}
print(arguments.length);
return new Date(3);
}
print(wrap());
{
{
print(/ab+c/);
;
}
}
var w = 1;
while (w > 0) {
w--;
class B9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B9(true);
}
m0(a) {
return a + this.x;
}
}
print(B9.make().value);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
