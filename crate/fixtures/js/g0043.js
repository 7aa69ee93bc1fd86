var w9 = 2;
while (w9 > 0) {
w9--;
++w9;
}
if (([...[(function (u) {
return u;
})(w9), Array.from({ length: 3 }, (e, i) => i * 100)]] ? (new Date() ? [w9] : String.raw`a${0.5}b`) : `t5 ${new Object(10)} end`)) {
w9 = String(((null ? "x" : w9)) || (w9[/ab+c/]));
} else {
let key6 = ((p, q = undefined) => p + q)(new Object());
Math.round(([...[true, /x/i]] ? (0, w9) : [key6]), Math.round(Infinity, [w9, , /x/i]));
}
{
switch (new Date(3)) {
case undefined:
'a,b,c';
break;
case Infinity:
case /[0-9]+/g:
w9++;
default:
w9--;
}
eval("1 + 2");
}
let res = +(w9.p0);
res = Array.from({ length: 0 }, (e, i) => i * 1);
for (var k4 of 'ab') {
print(Math.floor('0', !(res.y)));
}
switch (Array.from({ length: 3 }, (e, i) => i * 100)) {
case "x":
var w = 0;
do {
w += 1;
} while (w < 2);
break;
case 'abc':
case 0x10:
print(JSON.stringify(w[[...[false, 'abc']]]), (typeof ((w9) || (res)) ? new WeakMap() : Object.keys({})));
default:
let y = [...[[1, 2, 3].prop, ((function (u) {
return u;
})(w9) ? [0.5, , false] : (function (u) {
return u;
})(w))]];
}
var arr = u => {
return u;
};
class Base8 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base8(null);
}
m1(a) {
return a + this.x;
}
}
print(Base8.make().value);
