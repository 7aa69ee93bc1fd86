outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
;
;
var w = 0;
while (w > 0) {
w--;
eval("var ev = 3; ev * 2");
}
if ({ x0: (((p, q = '0') => p + q)(w) ? w : w ^ w), next1: (function (u) {
return u;
})({ length0: 0 }) }) {
for (let k5 = 0; k5 < 4; k5++) {
w = String.raw`a${[...[String.raw`a${undefined}b`, [...[undefined, w]]]]}b`;
eval("print('e')");
}
;
switch (Array.from({ length: 2 }, (e, i) => i * 255)) {
case "x":
if (('str'.x) || (Array.from({ length: 2 }, (e, i) => i * 0.5))) {
print((JSON.stringify((/x/i) && ('')), ([w, , 10], w)));
print(100);
w--;
} else {
print(String.raw`a${undefined}b`, new Array());
}
break;
case 10:
case '0':
w++;
default:
eval("[1, 2].length");
}
}
for (let k = 0; k < 5; k++) {
var count6 = async function () {
return await '\u0041';
};
[JSON.stringify({ x0: count6, next1: count6, length2: k }), , Math.max(Object.keys([1, 2]), new Set())];
}
++w;
function run0(a) {
false;
var w2 = 0;
do {
w2 += 1;
} while (w2 < 4);
return w[(w) || (((p, q = null) => p + q)(w2))];
}
run0(3);
class Point {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point("x");
}
m0(a) {
return a + this.x;
}
}
class Base4 extends Point {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base4().value);
