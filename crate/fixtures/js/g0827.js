class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
print(A.make().value);
switch (Math.sqrt(A[`t2 ${'\n'} end`], new Map() <= A)) {
case /ab+c/:
var tmp = u => {
return u;
};
break;
case '':
case 'a,b,c':
eval("print('e')");
default:
print(-1, { p10: new Object(0), x1: { y0: '0', x1: tmp } } != new Array());
}
++A;
var w8 = 3;
while (w8 > 0) {
w8--;
try {
for (const p4 of [1, 2, 3]) {
eval("1 + 2");
}
} catch (ex3) {
print(ex3);
}
}
var obj8 = ((p, q = true) => p + q)({ value0: ({ x: 1, length: 2 }).x, prop1: Math.max(A, A), p02: Object.keys({ a: 1 }) });
eval("print('e')");
print((~(Math.min(obj8, /x/i))) ?? (+((A) ?? (true))));
