function make(b2, n3) {
print([...[Object.keys({ a: 1 }), ((p, q = 'a,b,c') => p + q)(b2)]] << [], (3) ?? (b2[(b2, n3)]));
++b2;
if (new.target) {
print('ctor');
}
return String.raw`a${JSON.stringify(Array.from({ length: 2 }, (e, i) => i * 1))}b`;
}
print(make(/ab+c/, 'hello'));
var w9 = 0;
do {
w9 += 1;
} while (w9 < 3);
var y = function* () {
yield 'hello';
yield* [1, 2];
};
class A2 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A2(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
class A extends A2 {
constructor() {
super('hello');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new A().value);
{
[[...[y < w9, /[0-9]+/g >= /ab+c/]], , Math.floor(w9, y)];
}
const n = [new Map(), , `t4 ${[...[0x10, '\n']]} end`];
y--;
