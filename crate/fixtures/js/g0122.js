try {
var flag9 = async function () {
return await true;
};
throw new Error('\n');
} catch (e9) {
print(e9.message);
} finally {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
}
if (String(true)) {
for (var j = 0; j < 4; j++) {
j = [...[((p, q = 3) => p + q)(`t1 ${'0'} end`), Math.min(String.raw`a${'hello'}b`, ((p, q = undefined) => p + q)(/x/i))]];
var w = 0;
do {
w += 1;
} while (w < 2);
}
print(/x/i);
;
} else {
const a = ((function (u) {
return u;
})([true, , /[0-9]+/g]) ? (function (u) {
return u;
})(JSON.stringify(1)) : (Object.keys([1, 2])) ?? (new WeakMap()));
var w21 = 0;
do {
w21 += 1;
} while (w21 < 1);
}
function f() {
{
print(undefined);
}
{
print(void ((function (u) {
return u;
})((/ab+c/ ? null : 255))));
print(JSON.stringify(-1));
}
if (new.target) {
print('ctor');
}
return '';
}
f();
var y = function* () {
yield 0;
yield* [1, 2];
};
var count6 = (u, v = /[0-9]+/g) => u + v;
++y;
count6--;
count6 = `t7 ${new Date(10)} end`;
