var data = (u, v = 0x10) => u + v;
;
const z8 = Math.floor(('\n' ? (data) ?? (Infinity) : (null) || (data)), new Object());
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box('a,b,c');
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
;
Box--;
++data;
switch (data.p0) {
case /[0-9]+/g:
for (let p2 in { a: 1, b: 2 }) {
[...[z8, (function (u) {
return u;
})('str'.y)]];
}
break;
case /x/i:
case null:
100;
default:
eval("1 + 2");
}
var w = 0;
do {
w += 1;
} while (w < 4);
