print(String.raw`a${Array.from({ length: 0 }, (e, i) => i * 0x10)}b`);
function run2(count2, str2) {
((p, q = /[0-9]+/g) => p + q)(new Object(0));
print(arguments.length);
return (String.raw`a${(0 ? count2 : count2)}b` ? ((p, q = 'a,b,c') => p + q)(new Map()) : { x0: null > str2 });
}
print(run2(true, 0));
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
var arr = (u, v = /ab+c/) => u + v;
arr <<= ([...[String.raw`a${/ab+c/}b`, [false, , 'hello']]] ? Array.from({ length: 2 }, (e, i) => i * 2) : [(arr) || ('0'), , `t1 ${arr} end`]);
var w = 0;
while (w > 0) {
w--;
print(w, 'str'.next);
}
var flag3 = { prop0: new WeakMap(), length1: w };
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
var str0 = async function () {
return await 100;
};
var w14 = 0;
do {
w14 += 1;
} while (w14 < 3);
debugger;
