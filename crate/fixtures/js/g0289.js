print(undefined);
print('str'.x);
for (var j = 0; j < 2; j++) {
for (var k = 0; k < 4; k++) {
class Point1 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Point1("x");
}
m1(a) {
return a + this.x;
}
}
print(Point1.make().value);
;
}
j = Array.from({ length: 4 }, (e, i) => i * 100);
}
;
print(null);
try {
/x/i;
} catch (ex4) {
print(ex4.message);
}
switch (`t2 ${(function (u) {
return u;
})(JSON.stringify('\n'))} end`) {
case 0.5:
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue outer;
}
}
break;
case false:
case /ab+c/:
;
default:
print(String.raw`a${'str'[[false, '', '\n']]}b`);
}
;
[...[[1, 2, 3][{ prop0: /[0-9]+/g, p01: 255 }], ([] ? ((p, q = /x/i) => p + q)(undefined) : ('', undefined))]];
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
;
