print(0.5);
for (var j = 0; j < 1; j++) {
if (`t7 ${Object.keys({})} end`) {
var w = 0;
do {
w += 1;
} while (w < 2);
const a0 = -(`t5 ${j[j]} end`);
print(w.p0);
} else {
{
print((function (u) {
return u;
})(((p, q = 10) => p + q)(new Map())));
--j;
}
}
var n3 = async function () {
return await 'hello';
};
}
String(Math.max(Math.min(null, /[0-9]+/g), new Error()));
var w19 = 3;
while (w19 > 0) {
w19--;
print((function (u) {
return u;
})((function (u) {
return u;
})(Array.from({ length: 0 }, (e, i) => i * -1))));
}
;
try {
print((new WeakMap() ? w19 : typeof ((w19 ? "x" : w19))));
Array.from({ length: 1 }, (e, i) => i * 3);
} catch (err8) {
print(err8);
} finally {
print(JSON.stringify(Object.keys({ a: 1 })), (function (u) {
return u;
})(JSON.stringify({ length0: 'hello', prop1: false })));
}
w19 <<= [null, `t8 ${Object.keys([1, 2])} end`, w19.x];
