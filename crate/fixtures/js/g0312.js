const data3 = void (Object.keys([1, 2]));
print(void ((Array.from({ length: 3 }, (e, i) => i * 0x10)) || ([data3])), `t7 ${[undefined, , void (data3)]} end`);
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
try {
;
} catch (err8) {
print(err8);
}
print(new Array(3));
{
var w1 = 2;
while (w1 > 0) {
w1--;
var w3 = 1;
while (w3 > 0) {
w3--;
/ab+c/;
}
}
}
print([{ p10: `t8 ${null} end`, p11: (/x/i ? w7 : 1), value2: { x0: w7 } }, , `t2 ${Array.from({ length: 4 }, (e, i) => i * 2)} end`], (typeof (Array.from({ length: 3 }, (e, i) => i * Infinity))) || ((data3) && (((p, q = undefined) => p + q)(w7))));
for (var k2 in [1, 2]) {
function compute1(n, b) {
print(String.raw`a${(new Object() ? [true, , /[0-9]+/g] : (data3) && (n))}b`);
w7--;
return String.raw`a${String.raw`a${`t4 ${'hello'} end`}b`}b`;
}
print(compute1('a,b,c', "x"));
}
{
new Map();
try {
eval("1 + 2");
throw new Error('a,b,c');
} catch (e) {
print(e);
}
}
var arr = (([...['', data3]]) && (JSON.stringify(w7))) || (String(new Date()));
print((String.raw`a${[]}b`, Array.from({ length: 2 }, (e, i) => i * 1e3)), Object.keys({}));
