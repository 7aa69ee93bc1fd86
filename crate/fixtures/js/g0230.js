;
if (JSON.stringify(Array.from({ length: 4 }, (e, i) => i * 3))) {
;
print((function (u) {
return u;
})(Math.abs(100 > true, `t4 ${0} end`)), Object.keys({ a: 1 }));
} else {
switch (Object.keys({ a: 1 })) {
case undefined:
print(/x/i);
break;
case '0':
case 100:
print(Array.from({ length: 4 }, (e, i) => i * -1), (function (u) {
return u;
})(({ x: 1, length: 2 }).p1));
default:
print('abc');
}
for (let i0 = 0; i0 < 1; i0++) {
for (var k = 0; k < 4; k++) {
print({ x0: [...[`t5 ${k} end`, String.raw`a${k}b`]] });
print(String(k));
}
if (new Date()) {
++i0;
print(Object.keys([1, 2]));
}
}
}
let obj = Object.keys({});
function f6(item0, n3) {
n3 <<= ([...[String.raw`a${n3}b`, /x/i]]) && (`t6 ${Object.keys([1, 2])} end`);
eval("var ev = 3; ev * 2");
return [Object.keys({ a: 1 }), , [Array.from({ length: 4 }, (e, i) => i * 0.5), , 'hello']];
}
f6(3, 'hello');
obj--;
var w1 = 3;
while (w1 > 0) {
w1--;
if ((function (u) {
return u;
})([/[0-9]+/g, , (function (u) {
return u;
})('hello')])) {
var c8 = function (...u) {
return u.length;
};
}
}
for (var i19 = 0; i19 < 2; i19++) {
w1 += !((function (u) {
return u;
})((function (u) {
return u;
})(1e3)));
i19++;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
var b = Math.pow(String(String(obj)), /ab+c/);
