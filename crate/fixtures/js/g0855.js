try {
;
throw new Error('abc');
} catch (e) {
print(e.message);
} finally {
print(Object.keys({}));
}
Math.pow(String.raw`a${/x/i}b`, Math.pow('\u0041', 1) != Array.from({ length: 0 }, (e, i) => i * -1));
print(NaN);
class Box4 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box4(0.5);
}
m2(a) {
return a + this.x;
}
}
class Box extends Box4 {
constructor() {
super(null);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
let m9 = { p00: Box4[(Box4, 100)] };
try {
Box4 = Box;
} catch (err5) {
print(err5);
}
const x = '0';
