eval("print('e')");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
print("x");
print((Object.keys({}) == [1, 2, 3][0] ? new Date(1) > { y0: undefined, p01: /[0-9]+/g, length2: null } : 'abc'), ~(`t1 ${String(undefined)} end`));
eval("print('e')");
;
switch ([1, 2, 3].x) {
case 'abc':
if ((`t6 ${{ y0: null }} end` ? ({ x: 1, length: 2 }).y : String.raw`a${JSON.stringify(255)}b`)) {
var a = ((p, q = undefined) => p + q)(String.raw`a${(function (u) {
return u;
})(0)}b`);
const count = `t5 ${((p, q = /ab+c/) => p + q)('str'[a])} end`;
} else {
print('0');
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C('');
}
m1(a) {
return a + this.x;
}
}
print(C.make().value);
}
break;
case null:
case true:
;
default:
;
}
for (var p in [1, 2]) {
switch (p.length) {
case /[0-9]+/g:
++p;
break;
case 255:
case 10:
--p;
default:
p--;
}
}
if (String((false, "x") * ({ x: 1, length: 2 })[/ab+c/])) {
eval("var ev = 3; ev * 2");
;
} else {
function g8(val, x7) {
val = Object.keys([1, 2]);
;
print(arguments.length);
return ~(((p, q = /ab+c/) => p + q)(Object.keys({})));
}
print(g8('a,b,c', NaN));
}
;
