typeof ([...['hello', String.raw`a${true}b`]]);
try {
print(/ab+c/);
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue outer;
}
}
} catch (e) {
print(e);
}
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break;
}
}
}
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(255);
}
m1(a) {
return a + this.x;
}
}
print(Box.make().value);
