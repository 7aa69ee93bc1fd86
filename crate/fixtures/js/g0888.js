let res = `t0 ${[1, 2, 3][[1, 2, 3]["x"]]} end`;
res |= Array.from({ length: 1 }, (e, i) => i * 255);
;
function check() {
eval("var ev = 3; ev * 2");
if (new.target) {
print('ctor');
}
print(arguments.length);
return `t3 ${Array.from({ length: 2 }, (e, i) => i * 10)} end`;
}
print(check());
try {
res += !(Object.keys({ a: 1 }));
throw new TypeError('0');
} catch (err7) {
print(err7.message);
}
res--;
res--;
;
print(JSON.stringify(false));
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box("x");
}
m0(a) {
return a + this.x;
}
}
print(Box.make().value);
