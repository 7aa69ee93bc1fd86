try {
;
throw new TypeError('hello');
} catch (err1) {
print(err1.message);
} finally {
;
}
'a,b,c';
print("x");
for (var j = 0; j < 2; j++) {
var w1 = 0;
while (w1 > 0) {
w1--;
++w1;
}
var w2 = 1;
while (w2 > 0) {
w2--;
eval("var ev = 3; ev * 2");
}
}
var w = 0;
do {
w += 1;
} while (w < 1);
var w14 = 2;
while (w14 > 0) {
w14--;
{
switch ((([w, , w]) && (w.p0), { p00: new Set(), value1: new WeakMap(), p12: { p10: w14, length1: w, p02: 'hello' } })) {
case true:
print(-(w));
break;
case 'abc':
case 1:
w14 -= void (new Set());
default:
eval("1 + 2");
}
}
}
print([w14.next, , (function (u) {
return u;
})((function (u) {
return u;
})(w))]);
for (const k6 in [1, 2]) {
;
}
if (new Date()) {
{
function g(data, str) {
w = String(JSON.stringify(w14));
eval("[1, 2].length");
return new Error();
}
print(g(2, /x/i));
}
switch (2) {
case '0':
debugger;
break;
case /[0-9]+/g:
case /x/i:
w14 |= w;
default:
var tmp6 = new Error();
}
--w;
}
++w;
