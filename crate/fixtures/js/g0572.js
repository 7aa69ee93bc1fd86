{
;
}
;
var w2 = 0;
do {
w2 += 1;
} while (w2 < 3);
;
w2 = Array.from({ length: 2 }, (e, i) => i * 100);
print((String.raw`a${[w2, , 'a,b,c']}b`) || ((w2.p0) && ([...['hello', null]])));
print(`t5 ${(function (u) {
return u;
})(['hello'])} end`);
for (var j = 0; j < 4; j++) {
eval("var ev = 3; ev * 2");
class C0 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C0(100);
}
m0(a) {
return a + this.x;
}
}
print(C0.make().value);
}
