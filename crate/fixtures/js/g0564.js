try {
;
} catch (ex2) {
print(ex2);
}
print(/ab+c/);
var w = 0;
do {
w += 1;
} while (w < 3);
for (let p5 of []) {
{
{
w = (function (u) {
return u;
})(w);
w++;
}
}
}
w = [JSON.stringify(((p, q = 'abc') => p + q)(/x/i)), , ((p, q = 0) => p + q)(JSON.stringify(w))];
w *= w;
if (w) {
++w;
w *= 'a,b,c';
function wrap9() {
print([void (w[w])], (new Error(10) ? Object.keys({}) : [new Array(), , ((p, q = undefined) => p + q)(w)]));
JSON.stringify(null);
print(arguments.length);
return w;
}
print(wrap9());
}
var w8 = 0;
do {
w8 += 1;
} while (w8 < 3);
{
((p, q = 'abc') => p + q)([...[-1 + 2, (w ? /ab+c/ : /x/i)]]);
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
}
eval("var ev = 3; ev * 2");
