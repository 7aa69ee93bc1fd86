var count4 = u => {
return u;
};
count4 = 0;
count4;
eval("print('e')");
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
try {
Array.from({ length: 0 }, (e, i) => i * 1e3);
count4 <<= [1, 2, 3][[String.raw`a${count4}b`, , JSON.stringify('a,b,c')]];
} catch (ex) {
print(ex);
}
print(String(String.raw`a${('\u0041' ? count4 : count4)}b`), count4[(new Object(10), typeof (count4))]);
function test6(obj1, c2) {
print([...[new Error(1), ((p, q = null) => p + q)(String(false))]], count4);
var w0 = 0;
do {
w0 += 1;
} while (w0 < 1);
if (new.target) {
print('ctor');
}
return c2;
}
print(test6(/x/i, /x/i));
function wrap1() {
++count4;
if (new.target) {
print('ctor');
}
print(arguments.length);
return !(count4.p0);
}
print(wrap1());
