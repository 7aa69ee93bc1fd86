print(0x10);
try {
print('str'[(function (u) {
return u;
})([...['abc', 0x10]])], ([1, 2, 3][new WeakMap()] ? Array.from({ length: 0 }, (e, i) => i * 100) : -1));
throw new TypeError('\n');
} catch (ex) {
print(ex.message);
}
try {
Object.keys([1, 2]) > new Date(10);
let key8 = /ab+c/;
} catch (ex1) {
print(ex1.message);
} finally {
var a2 = (u, v = /x/i) => u + v;
}
print(true);
var res = async function () {
return await null;
};
;
if (String.raw`a${{ length0: /[0-9]+/g }}b` < ([...[/x/i, true]] ? (2, res) : Array.from({ length: 2 }, (e, i) => i * NaN))) {
if (res) {
++res;
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue;
}
}
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) continue;
}
}
} else {
res--;
;
}
res++;
++res;
}
res++;
