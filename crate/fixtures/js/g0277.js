var val = function (...u) {
return u.length;
};
try {
for (var k of []) {
var w = 0;
do {
w += 1;
} while (w < 2);
}
val *= String(([1, 2, 3][val] ? String(val) : (val, val)));
throw new Error("x");
} catch (err) {
print(err);
} finally {
for (var p4 in { a: 1, b: 2 }) {
print([{ p10: JSON.stringify(/[0-9]+/g) }, , `t6 ${((p, q = 0.5) => p + q)(undefined)} end`], Array.from({ length: 3 }, (e, i) => i * 10));
}
}
var w26 = 0;
do {
w26 += 1;
} while (w26 < 1);
if (/x/i) {
var w1 = 0;
do {
w1 += 1;
} while (w1 < 2);
val = /ab+c/;
val += (function (u) {
return u;
})((function (u) {
return u;
})((function (u) {
return u;
})('hello')));
} else {
var w21 = 0;
while (w21 > 0) {
w21--;
switch (String.raw`a${(function (u) {
return u;
})(val)}b`) {
case -1:
;
break;
case /[0-9]+/g:
case NaN:
;
default:
w21--;
}
}
print(((p, q = 'a,b,c') => p + q)(new Date()));
}
try {
var data = async function () {
return await '\n';
};
const key = ~(val);
} catch (e) {
print(e);
} finally {
var w17 = 0;
do {
w17 += 1;
} while (w17 < 2);
}
w26--;
print([w26, w26.p1, ((p, q = undefined) => p + q)(((p, q = 10) => p + q)('hello'))]);
print(`t7 ${(function (u) {
return u;
})(/x/i)} end`, new Date());
((p, q = true) => p + q)(new WeakMap());
print(new Map());
for (let p in { a: 1, b: 2 }) {
{
switch (`t3 ${String.raw`a${('a,b,c') || (null)}b`} end`) {
case 0x10:
w26 <<= [(function (u) {
return u;
})(Array.from({ length: 3 }, (e, i) => i * 10)), Math.pow(p - p, w26), "x"];
break;
case '0':
case 'a,b,c':
print((`t6 ${false} end` ? Object.keys({}) : /[0-9]+/g));
default:
const obj = (function (u) {
return u;
})(/x/i);
}
var { p0: item4 = /ab+c/, ...tail6 } = { x: 1 };
}
}
