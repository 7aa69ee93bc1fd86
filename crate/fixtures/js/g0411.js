{
function wrap5(flag0) {
Array.from({ length: 2 }, (e, i) => i * NaN);
print(arguments.length);
return (function (u) {
return u;
})((/x/i !== 'abc' ? /[0-9]+/g : ~(null)));
}
print(wrap5('a,b,c'));
}
var w1 = 0;
do {
w1 += 1;
} while (w1 < 4);
[[String.raw`a${w1}b`, , /x/i < true], , `t5 ${null} end`];
w1++;
print([((w1 ? w1 : false), Array.from({ length: 3 }, (e, i) => i * 1e3)), , [Array.from({ length: 4 }, (e, i) => i * 0.5), , (w1) ?? (Infinity)]]);
class B8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new B8(undefined);
}
m1(a) {
return a + this.x;
}
}
print(B8.make().value);
