print(String.raw`a${'\u0041'}b`, [] >= ([/[0-9]+/g, '0']) || (String.raw`a${null}b`));
function test7(y, item) {
++y;
var data0 = { data0, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
for (var k8 = 0; k8 < 1; k8++) {
item--;
--y;
}
print(arguments.length);
return ((new Date(10)) || (y) ? Array.from({ length: 0 }, (e, i) => i * 1) : [...[false, /ab+c/ >> /x/i]]);
}
print(test7(0.5, "x"));
eval("print('e')");
print(!(Array.from({ length: 4 }, (e, i) => i * 3)));
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
m1(a) {
return a + this.x;
}
}
print(Box.make().value);
print(Box);
try {
if (new Map()) {
print(Box, String(~(Box) !== Box - Box));
} else {
for (const p in [1, 2]) {
print([...[(function (u) {
return u;
})(Math.pow('\n', undefined)), [...[JSON.stringify(false), ((p, q = '\u0041') => p + q)(p)]]]]);
}
Box++;
}
throw new TypeError('\n');
} catch (ex0) {
print(ex0);
}
