var key8 = { key8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['']: 1, ...{ q: 2 } };
{
key8--;
var w = 0;
do {
w += 1;
} while (w < 2);
}
try {
var w9 = 0;
do {
w9 += 1;
} while (w9 < 2);
w9++;
} catch (err6) {
print(err6);
}
key8 += /[0-9]+/g;
for (let p4 in { a: 1, b: 2 }) {
print(({ x0: ((p, q = 'abc') => p + q)('\u0041'), x1: ((p, q = /ab+c/) => p + q)(key8), prop2: p4.p1 }, Math.abs(((p, q = /x/i) => p + q)(/x/i), 0)));
}
{
key8--;
}
function g() {
for (let p8 in { a: 1, b: 2 }) {
var obj8 = ([[1, 2, 3]['\n'], , (function (u) {
return u;
})(p8)]) ?? ((function (u) {
return u;
})((p8) && (p8)));
}
var w3 = 0;
while (w3 > 0) {
w3--;
--w3;
}
(function (u) {
return u;
})(new Map());
print(arguments.length);
return new Date();
}
print(g());
;
if (new Array()) {
eval("1 + 2");
var a0 = function (...u) {
return u.length;
};
eval("print('e')");
} else {
for (let k in { a: 1, b: 2 }) {
key8--;
}
}
eval("1 + 2");
eval("1 + 2");
