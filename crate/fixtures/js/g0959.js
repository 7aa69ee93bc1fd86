void ('0');
if ([null, `t2 ${new Set()} end`]) {
;
print(/ab+c/);
} else {
for (let p9 in [1, 2]) {
const count = void ({ y0: Object.keys([1, 2]) });
}
{
for (let k0 of 'ab') {
var c0 = k0[k0.x];
}
}
}
+(String.raw`a${(function (u) {
return u;
})(null)}b`);
eval("print('e')");
class Box7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box7(NaN);
}
m2(a) {
return a + this.x;
}
}
print(Box7.make().value);
for (let p3 of [1, 2, 3]) {
var b0 = function* () {
yield false;
yield* [1, 2];
};
}
