{
const tmp8 = [new Map(), , 255 > null] % 'a,b,c';
switch (tmp8[tmp8[tmp8.p0]]) {
case null:
print(Infinity);
break;
case 100:
case 100:
print(((tmp8[undefined], Math.max(Infinity, /x/i)), String(tmp8)), { next0: (function (u) {
return u;
})(~(tmp8)), p11: 1, length2: Array.from({ length: 0 }, (e, i) => i * 255) });
default:
print(/ab+c/);
}
}
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(/x/i);
}
m0(a) {
return a + this.x;
}
}
print(Point.make().value);
const key = String(Object.keys({ a: 1 }));
print([...[(function (u) {
return u;
})(-1) >> 'hello' / Infinity, new Map()]], [JSON.stringify("x") >= new Array(1), String(JSON.stringify(/x/i)), `t1 ${('\u0041', key)} end`]);
