for (const k of []) {
var w = 3;
while (w > 0) {
w--;
w = Math.round(Array.from({ length: 4 }, (e, i) => i * 100), String.raw`a${`t7 ${'hello'} end`}b`);
}
}
let a = [...[`t4 ${new Error(1)} end`, Math.sqrt('\n', (function (u) {
return u;
})(/ab+c/))]];
a++;
a--;
var b = u => {
return u;
};
switch (Array.from({ length: 1 }, (e, i) => i * 10)) {
case 255:
;
break;
case 0x10:
case -1:
a = [1, 2, 3].p1;
default:
eval("var ev = 3; ev * 2");
}
function run(val, item) {
print(`t6 ${(b[a], ((p, q = /x/i) => p + q)(a))} end`, new Map());
item *= a;
return { length0: `t8 ${String(-1)} end`, x1: JSON.stringify([...['\u0041', a]]) };
}
print(run(/x/i, /x/i));
debugger;
for (let i = 0; i < 4; i++) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(3);
}
m0(a) {
return a + this.x;
}
}
class Box extends C {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
for (var p7 in { a: 1, b: 2 }) {
let obj = ({ next0: Math.floor('abc', 'a,b,c'), x1: Array.from({ length: 0 }, (e, i) => i * 3) }, String([...[false, "x"]]));
}
}
