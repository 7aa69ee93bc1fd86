outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
switch (Object.keys({ a: 1 })) {
case 'abc':
print('a,b,c');
break;
case /[0-9]+/g:
case 1e3:
eval("1 + 2");
default:
print('0');
}
;
;
(~(JSON.stringify(undefined)), [1, 2, 3]['a,b,c' % 'abc']);
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(null);
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
++Box;
Box = ('a,b,c', { p00: Box }) | `t3 ${new Map()} end`;
Box = Box;
for (const k of 'ab') {
for (let i0 = 0; i0 < 2; i0++) {
Box = new Object(1);
var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
}
}
print(String(Math.sqrt(JSON.stringify(Box), `t5 ${undefined} end`)));
