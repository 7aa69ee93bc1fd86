const val7 = String.raw`a${'str'[String(1)]}b`;
;
print(String.raw`a${/x/i}b`);
print({ y0: { next0: Math.floor(-1, /x/i), value1: { next0: 1e3, p11: /ab+c/, p02: "x" }, prop2: val7.x } }, -({ next0: [] }));
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(100);
}
m2(a) {
return a + this.x;
}
}
print(Box.make().value);
print(NaN);
Box = new Array(10);
Box = typeof (new Set());
const flag9 = val7;
