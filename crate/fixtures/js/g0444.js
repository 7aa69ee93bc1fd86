debugger;
function f(obj8, m) {
switch (new WeakMap()) {
case 'a,b,c':
m = Array.from({ length: 1 }, (e, i) => i * 3);
break;
case '\u0041':
case null:
var x = false;
default:
--m;
}
try {
print(([255 >> m, m[m], m]) && (((p, q = 'abc') => p + q)(new Set())), [...[new WeakMap(), ('0' ? [...[m, m]] : (/ab+c/ ? null : obj8))]]);
;
} catch (ex) {
print(ex);
} finally {
print(((p, q = '0') => p + q)(Array.from({ length: 1 }, (e, i) => i * 3)));
}
print(`t6 ${new Set()} end`);
print(arguments.length);
return obj8.p0;
}
f(false, "x");
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
print(JSON.stringify(Array.from({ length: 2 }, (e, i) => i * 1)), Object.keys({}));
;
if (new Map()) {
var w = 0;
do {
w += 1;
} while (w < 2);
function check0(z0, arr) {
z0 = new Date();
--w;
z0 = Object.keys([1, 2]);
return [...[Object.keys({}), new Map()]];
}
print(check0(false, /ab+c/));
print(/ab+c/);
}
print(false);
