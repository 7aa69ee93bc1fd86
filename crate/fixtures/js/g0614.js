function test5(tmp2, count) {
++tmp2;
if (JSON.stringify(({ next0: count, y1: true, length2: count }) ?? (void (count)))) {
count = { x0: [[count, /[0-9]+/g], , (tmp2) ?? (/[0-9]+/g)], prop1: (`t3 ${tmp2} end`) && (JSON.stringify(tmp2)) };
++tmp2;
}
let z9 = Array.from({ length: 3 }, (e, i) => i * 1e3);
return [/ab+c/, z9];
}
print(test5(null, true));
;
print(Math.abs(/x/i, [(function (u) {
return u;
})(/ab+c/)]), (new Map() ? ((p, q = false) => p + q)((null) ?? (Infinity)) : Object.keys({ a: 1 }) >>> [...[false, true]]));
debugger;
print(/ab+c/);
;
var w6 = 2;
while (w6 > 0) {
w6--;
++w6;
}
w6 &= ((p, q = 'a,b,c') => p + q)(((p, q = '0') => p + q)(w6[w6]));
class Box8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box8(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
print(Box8.make().value);
function wrap(flag0, b) {
{
++w6;
}
Box8--;
if (new.target) {
print('ctor');
}
return `t3 ${w6} end`;
}
print(wrap(null, true));
w6--;
