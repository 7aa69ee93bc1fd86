print('0');
for (const k in { a: 1, b: 2 }) {
class B2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B2(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(B2.make().value);
}
function run() {
print({ y0: ({ x: 1, length: 2 }).prop, prop1: 10, p02: (`t6 ${/[0-9]+/g} end` ? { x0: 3 } : [...[true, /[0-9]+/g]]) }, [-1, , [...[[true, , 100], Math.pow('a,b,c', "x")]]]);
return (-(JSON.stringify(0.5)), ({ x: 1, length: 2 }).y);
}
print(run());
var tmp = new Object();
eval("print('e')");
var w6 = 0;
do {
w6 += 1;
} while (w6 < 4);
