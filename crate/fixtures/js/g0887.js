{
function compute8() {
;
eval("var ev = 3; ev * 2");
;
if (new.target) {
print('ctor');
}
return ('abc') || (['str'['hello'], , Math.max(/[0-9]+/g, 0x10)]);
}
print(compute8());
function helper(arr) {
var key4 = new Error();
print(arguments.length);
return `t3 ${(compute8(arr) ? compute8(undefined, key4) : String.raw`a${/ab+c/}b`)} end`;
}
print(helper(/[0-9]+/g));
}
print([...[(function (u) {
return u;
})([1, 2, 3][/ab+c/]), Math.round({ prop0: false }, /x/i)]], new Error(1));
;
print(1e3);
print(((p, q = '\n') => p + q)(+(String(undefined))), Object.keys([1, 2]));
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(2);
}
m0(a) {
return a + this.x;
}
}
class Box extends Derived {
constructor() {
super(true);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Box().value);
--Box;
Derived = Math.sqrt(((p, q = '\u0041') => p + q)((1e3 ? Box : 0.5)), String([undefined, null]));
for (var k1 = 0; k1 < 1; k1++) {
for (let i3 = 0; i3 < 5; i3++) {
++Derived;
i3++;
}
const acc = [([]) ?? ([Box, , "x"]), , 'str'[k1 != '\u0041']];
}
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
