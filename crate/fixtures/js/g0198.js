;
{
print(new Date());
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
}
}
function make7(res) {
try {
--res;
throw new RangeError('abc');
} catch (e) {
print(e.message);
}
--res;
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C('a,b,c');
}
m2(a) {
return a + this.x;
}
}
print(C.make().value);
return ((p, q = /ab+c/) => p + q)(JSON.stringify(((p, q = false) => p + q)(res)));
}
print(make7(false));
;
print('a,b,c');
;
if (JSON.stringify((Array.from({ length: 3 }, (e, i) => i * 10) ? String(/[0-9]+/g) : [/[0-9]+/g, , /[0-9]+/g]))) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue outer;
}
}
}
print(JSON.stringify((('0' ? true : '\n') ? String.raw`a${'\u0041'}b` : Math.round(null, 0x10))));
;
print(String(make7(Array.from({ length: 1 }, (e, i) => i * 0.5), String(/ab+c/))));
let count9 = 'hello';
