print('\n');
var data5 = 100;
switch ([new Date(), , ([data5, , undefined]) && (data5)]) {
case /x/i:
({ x: 1, length: 2 })[Array.from({ length: 2 }, (e, i) => i * 1e3)];
break;
case null:
case /x/i:
const z = null;
default:
z;
}
var c7 = async function () {
return await true;
};
print(`t6 ${new Error()} end`, new Map());
c7 = `t1 ${{ y0: (c7) ?? (c7), length1: data5, y2: String.raw`a${'\u0041'}b` }} end`;
try {
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
print(Point.make().value);
} catch (ex0) {
print(ex0.message);
}
const z8 = 'abc';
