for (var k4 in { a: 1, b: 2 }) {
var m = String([]) <= k4;
}
print(((`t1 ${''} end`, ((p, q = null) => p + q)(/ab+c/))) ?? (((p, q = "x") => p + q)('a,b,c' ^ 'hello')));
{
print(JSON.stringify(new Object()));
[1, 2, 3].x;
}
print(/ab+c/);
print(String.raw`a${(function (u) {
return u;
})(void (undefined))}b`, (Math.pow(JSON.stringify(100), [null, , 'hello']), JSON.stringify([1, "x", '\n'])));
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(null);
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
function test(res1) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 0) continue outer;
}
}
function f6(z9) {
eval("var ev = 3; ev * 2");
var flag = (Math.min(res1, [Box, , z9]), String("x" / /[0-9]+/g));
return (~((res1) && (Box)) ? Math.abs([res1, null], ('', '\u0041')) : (((p, q = false) => p + q)(false), Math.min(flag, undefined)));
}
print(f6(0.5));
if (new.target) {
print('ctor');
}
print(arguments.length);
return Box.value;
}
print(test(0.5));
let res6 = new Date(3);
