class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box('\n');
}
m1(a) {
return a + this.x;
}
}
print(Box.make().value);
class A8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A8(/x/i);
}
m1(a) {
return a + this.x;
}
}
print(A8.make().value);
const obj = (function (u) {
return u;
})(new Set());
try {
print(JSON.stringify(Object.keys({})));
} catch (e8) {
print(e8.message);
}
--A8;
