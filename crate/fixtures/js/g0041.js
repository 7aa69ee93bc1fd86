debugger;
if (new Array()) {
eval("var ev = 3; ev * 2");
;
} else {
{
var str = async function () {
return await /ab+c/;
};
class Point6 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point6('abc');
}
m0(a) {
return a + this.x;
}
}
print(Point6.make().value);
}
try {
var w = 0;
do {
w += 1;
} while (w < 4);
if (255) {
print(Object.keys({ a: 1 }));
} else {
(null) || (w.p0);
}
} catch (ex) {
print(ex);
}
}
var { y: count4 = /[0-9]+/g, ...rest } = { x: 1 };
count4 = JSON.stringify(String.raw`a${String.raw`a${undefined}b`}b`);
try {
print(Object.keys([1, 2]), new Map());
print(count4[count4 >= '0'] % [2], ((p, q = '0') => p + q)((/ab+c/) ?? ([...[/x/i, 100]])));
throw new TypeError('\u0041');
} catch (err) {
print(err.message);
}
count4 = (Array.from({ length: 0 }, (e, i) => i * 2), Math.floor(Object.keys([1, 2]), Object.keys([1, 2])));
