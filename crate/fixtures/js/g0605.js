eval("[1, 2].length");
print(true);
{
print(null);
}
class Point5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point5('hello');
}
m2(a) {
return a + this.x;
}
}
print(Point5.make().value);
function helper(n5, acc2) {
let str = [...[[], [1, 2, 3].length]];
print(arguments.length);
return Array.from({ length: 1 }, (e, i) => i * 0.5);
}
print(helper(Infinity, null));
