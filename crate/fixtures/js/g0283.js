print(undefined);
print((`t3 ${Object.keys({ a: 1 })} end` ? new Set() : Math.min([NaN], Array.from({ length: 4 }, (e, i) => i * 255))));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
([], JSON.stringify(String.raw`a${NaN}b`));
let n = Math.abs(((function (u) {
return u;
})('\u0041') ? [false, , 'abc'] : (100) ?? ('0')), 0);
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(255);
}
m2(a) {
return a + this.x;
}
}
print(C.make().value);
{
if (false) {
switch ((`t6 ${String(n)} end`) && (((p, q = "x") => p + q)(new Error(1)))) {
case '\u0041':
C += [[C, C[/x/i]], , (n) && (1) >> n[n]];
break;
case 0:
case 100:
var count = { prop0: /[0-9]+/g };
default:
C |= (C ? ((p, q = /ab+c/) => p + q)(Object.keys({})) : { next0: count, prop1: Math.floor('\u0041', '\n'), y2: count });
}
} else {
eval("var ev = 3; ev * 2");
}
}
var y = { C, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
