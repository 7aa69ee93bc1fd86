print('\n');
eval("var ev = 3; ev * 2");
function test(z) {
class B {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B(false);
}
m2(a) {
return a + this.x;
}
}
print(B.make().value);
try {
eval("1 + 2");
;
} catch (ex) {
print(ex.message);
}
print(arguments.length);
return (JSON.stringify(Object.keys([1, 2])), { x0: ((p, q = /ab+c/) => p + q)('a,b,c'), x1: z[B], next2: (z, B) });
}
print(test(255));
for (const p6 in [1, 2]) {
for (let i5 = 0; i5 < 3; i5++) {
i5 = ([Math.sqrt(/x/i, i5)], `t2 ${Object.keys({})} end`);
i5++;
}
}
print(false);
print(JSON.stringify(new Set()), 1e3);
