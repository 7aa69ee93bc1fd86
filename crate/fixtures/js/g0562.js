{
if ((new Object() ? new Object(0) : String((function (u) {
return u;
})(/[0-9]+/g)))) {
var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
w0 = [Object.keys([1, 2]), , Array.from({ length: 3 }, (e, i) => i * 10)];
var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
}
}
[3, , Array.from({ length: 1 }, (e, i) => i * 1)];
var count8 = async function () {
return await '';
};
print(String([...[count8, count8]]) - (Object.keys([1, 2]), (count8, count8)));
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class A7 extends Base {
constructor() {
super('a,b,c');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A7().value);
print('hello');
[...[[...[[...[A7, count8]], `t4 ${1} end`]], new WeakMap()]];
count8 <<= Object.keys({ a: 1 });
for (let k = 0; k < 1; k++) {
;
const key7 = (new Array(1), new Date());
}
