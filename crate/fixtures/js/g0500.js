var count8 = u => {
return u;
};
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box('hello');
}
m2(a) {
return a + this.x;
}
}
print(Box.make().value);
;
print(String.raw`a${new Error(1)}b`, Array.from({ length: 1 }, (e, i) => i * NaN));
print(Box);
Box--;
