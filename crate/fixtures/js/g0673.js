{
`t7 ${[...[("x" ? '\u0041' : 0.5), "x"]]} end`;
}
;
;
class A5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A5(0);
}
m0(a) {
return a + this.x;
}
}
print(A5.make().value);
print(new Object(10));
print((String.raw`a${[false]}b`, Array.from({ length: 2 }, (e, i) => i * 2)), String.raw`a${[]}b`);
