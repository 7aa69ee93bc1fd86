const b = [({ x: 1, length: 2 })[['0', , 'a,b,c']], , String.raw`a${-(/[0-9]+/g)}b`];
;
function compute(data, str9) {
var x = (u, v = true) => u + v;
function f5(m6) {
data--;
++x;
;
return Array.from({ length: 2 }, (e, i) => i * Infinity);
}
f5(-1);
if (new.target) {
print('ctor');
}
return (Array.from({ length: 0 }, (e, i) => i * Infinity), [1, 2, 3].p0);
}
print(compute(/x/i, /[0-9]+/g));
const a = (Math.round((/ab+c/, b), String.raw`a${'abc'}b`)) && (((b, /ab+c/)) && (b[/x/i]));
try {
print(NaN);
} catch (ex) {
print(ex.message);
}
switch (b) {
case 0x10:
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/ab+c/);
}
m2(a) {
return a + this.x;
}
}
print(Base.make().value);
break;
case /[0-9]+/g:
case /[0-9]+/g:
Base++;
default:
eval("print('e')");
}
print('a,b,c');
var w = 0;
while (w > 0) {
w--;
if (compute(String.raw`a${((p, q = -1) => p + q)(b)}b`, ((p, q = /[0-9]+/g) => p + q)(`t8 ${'hello'} end`))) {
w = [[Object.keys({}), ('a,b,c') && (null)], , new Date()];
function f7(y, b6) {
;
print(arguments.length);
return ((p, q = 0.5) => p + q)([Object.keys({ a: 1 }), , String(Infinity)]);
}
print(f7(/[0-9]+/g, false));
;
}
}
