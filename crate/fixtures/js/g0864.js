print('a,b,c');
function check2(val5, acc) {
{
;
}
print(arguments.length);
return new Error();
}
print(check2(NaN, NaN));
var a2 = (u, v = false) => u + v;
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(1);
}
m2(a) {
return a + this.x;
}
}
class Box extends C {
constructor() {
super(/ab+c/);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
a2--;
check2(new Date(), JSON.stringify(typeof (a2)));
print(1, a2.next);
C = ([...[[], 'hello']], C);
switch ((C.p0 ? ({ p00: undefined }) ?? ((C ? Box : true)) : Box)) {
case true:
a2 &= [1, 2, 3][new Map()];
break;
case '\n':
case true:
eval("var ev = 3; ev * 2");
default:
print([(C, new Error(3)), (Array.from({ length: 2 }, (e, i) => i * 0), String.raw`a${undefined}b`)]);
}
