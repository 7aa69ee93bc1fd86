let b2 = (function (u) {
return u;
})((String.raw`a${-1}b` ? null : (function (u) {
return u;
})(3)));
switch ((b2[{ y0: b2, x1: b2, y2: b2 }], String.raw`a${(b2) || ('a,b,c')}b`)) {
case 'a,b,c':
;
break;
case -1:
case '0':
;
default:
b2 *= b2;
}
var count2 = (u, v = /[0-9]+/g) => u + v;
debugger;
try {
function f(tmp) {
tmp = (function (u) {
return u;
})({ x0: tmp.y, next1: Array.from({ length: 1 }, (e, i) => i * 3) });
return [...[~(count2), +(~(-1))]];
}
print(f(/[0-9]+/g));
for (let j = 0; j < 5; j++) {
var w = 0;
do {
w += 1;
} while (w < 2);
function f3(b3) {
(String(b2)) || (`t0 ${new Map()} end`);
print(f(Math.sqrt(new Object(1), [...[b3, count2]])), Object.keys({}));
if (new.target) {
print('ctor');
}
return f(new Object(1));
}
f3(/[0-9]+/g);
}
throw new Error('');
} catch (err) {
print(err.message);
}
if (Object.keys({})) {
{
;
var w15 = 1;
while (w15 > 0) {
w15--;
++w15;
}
}
} else {
b2++;
}
eval("[1, 2].length");
if (Math.min(count2, String((count2) ?? (0x10)))) {
{
count2 = Array.from({ length: 0 }, (e, i) => i * 0.5);
}
}
