var w = 0;
do {
w += 1;
} while (w < 3);
void (String.raw`a${w}b`);
var w3 = 2;
while (w3 > 0) {
w3--;
++w;
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(/[0-9]+/g);
}
m2(a) {
return a + this.x;
}
}
print(Box.make().value);
var acc8 = function (...u) {
return u.length;
};
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break;
}
}
print(String.raw`a${`t1 ${(/ab+c/) || (/ab+c/)} end`}b`);
acc8 = ([...[String.raw`a${1}b`, `t2 ${false} end`]]) || ((/ab+c/) || (w[/x/i]));
String.raw`a${acc8}b`;
