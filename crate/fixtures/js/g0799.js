eval("[1, 2].length");
switch (/[0-9]+/g) {
case true:
var [y8, , ...tail2] = [/ab+c/, 2, 3];
break;
case /ab+c/:
case 0:
y8 = `t1 ${y8} end`;
default:
var c = y8.p0;
}
print((Array.from({ length: 2 }, (e, i) => i * Infinity) ? (/ab+c/) ?? (Object.keys([1, 2])) : String.raw`a${Array.from({ length: 3 }, (e, i) => i * 2)}b`));
{
try {
print(typeof (Math.max(new WeakMap(), ({ x: 1, length: 2 }).y)));
} catch (ex) {
print(ex);
}
;
}
var w0 = 0;
do {
w0 += 1;
} while (w0 < 4);
const res1 = (function (u) {
return u;
})((function (u) {
return u;
})(w0[w0]));
if ('str'[JSON.stringify(w0) === Object.keys({ a: 1 })]) {
eval("var ev = 3; ev * 2");
} else {
var [val, , ...tail] = [/[0-9]+/g, 2, 3];
}
print([...[((w0, 2)) || (Math.floor(false, w0)), Math.pow((w0) && (res1), Object.keys({}))]]);
w0 = JSON.stringify(Array.from({ length: 4 }, (e, i) => i * -1));
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A('');
}
m0(a) {
return a + this.x;
}
}
print(A.make().value);
if ("x") {
{
eval("var ev = 3; ev * 2");
var w = 1;
while (w > 0) {
w--;
eval("[1, 2].length");
}
}
} else {
try {
switch (Object.keys([1, 2])) {
case 2:
print([[...[(function (u) {
return u;
})(A), 'str'[2]]], , [String.raw`a${res1}b`, (A ? res1 : A), !(w0)]], String.raw`a${new Map()}b`);
break;
case null:
case false:
w0 = A[(function (u) {
return u;
})(void ('\n'))];
default:
--w0;
}
const arr = res1;
} catch (err6) {
print(err6.message);
}
;
}
