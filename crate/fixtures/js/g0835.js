;
eval("var ev = 3; ev * 2");
print(null);
;
((p, q = false) => p + q)(new Error(3));
;
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(null);
}
m1(a) {
return a + this.x;
}
}
print(Base.make().value);
for (var i = 0; i < 5; i++) {
function g6(obj0, b) {
eval("[1, 2].length");
print(b, Object.keys({ a: 1 }));
return String(Object.keys({}));
}
print(g6(undefined, 'abc'));
i -= { x0: `t1 ${String(undefined)} end` };
}
Base++;
for (let k of [1, 2, 3]) {
var key = [([/x/i], /[0-9]+/g), , JSON.stringify(new Array(10))];
}
