switch (({ x: 1, length: 2 }).p0) {
case false:
print([null, , /[0-9]+/g], (String(Math.round(/x/i, /x/i)) ? Math.sqrt((true) || (/ab+c/), !(100)) : !(void (/x/i))));
break;
case null:
case null:
const acc1 = [2, , ((NaN, null)) ?? ('str'.x)];
default:
;
}
for (var j = 0; j < 1; j++) {
print(j, [j, new Map(), (new Object()) ?? (new Error(10))]);
(function (u) {
return u;
})((String(j)) ?? ([...[j, 'abc']]));
}
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base('a,b,c');
}
m1(a) {
return a + this.x;
}
}
class C4 extends Base {
constructor() {
super('\u0041');
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C4().value);
if ([new Map()]) {
(+('\u0041'), [...[/[0-9]+/g, ['abc', , 0.5]]]);
switch (new Map()) {
case /[0-9]+/g:
switch ([String.raw`a${[...[Base, '']]}b`, , Math.pow(String(Infinity), [])]) {
case /ab+c/:
print(Array.from({ length: 1 }, (e, i) => i * 0.5));
break;
case /x/i:
case 'hello':
++C4;
default:
print(C4, C4[((p, q = 'abc') => p + q)(String.raw`a${0.5}b`)]);
}
break;
case false:
case true:
print((Base[String.raw`a${'0'}b`] ? undefined : 'hello'));
default:
print(String.raw`a${Array.from({ length: 4 }, (e, i) => i * 100)}b`);
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue;
}
}
}
;
var w3 = 0;
do {
w3 += 1;
} while (w3 < 4);
print(Math.abs([false] !== '', Base), /ab+c/);
Base = [...[{ y0: [null, '0', 255], p11: { length0: undefined } }, [Base !== '', , String(null)]]];
w3 -= [String(['0', , w3]), Math.pow({ value0: true, p11: 1, prop2: undefined }, Base[w3])];
function g4() {
function h(z) {
print(0x10, [Array.from({ length: 2 }, (e, i) => i * 1e3), , Array.from({ length: 2 }, (e, i) => i * 2)]);
if (new.target) {
print('ctor');
}
return (w3 == { length0: w3, length1: undefined, length2: z } ? (function (u) {
return u;
})(0) : `t1 ${Math.abs('', /[0-9]+/g)} end`);
}
print(h(/x/i));
return new Date(10);
}
g4();
print(Array.from({ length: 3 }, (e, i) => i * 10), Math.min(new Object(10), String.raw`a${String.raw`a${NaN}b`}b`));
