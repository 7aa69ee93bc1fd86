for (let p7 of [1, 2, 3]) {
[new Error(), , (function (u) {
return u;
})(Array.from({ length: 4 }, (e, i) => i * 2))];
}
function wrap(y6) {
print(((p, q = /ab+c/) => p + q)({ value0: (y6) && (null), y1: true, p02: new WeakMap() }), y6);
if (new.target) {
print('ctor');
}
return 'str'[[({ x: 1, length: 2 })[y6]]];
}
print(wrap("x"));
{
print('abc');
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) continue;
}
}
}
print(({ x: 1, length: 2 })[((p, q = "x") => p + q)(JSON.stringify(10))]);
;
{
print((!({ next0: true }) ? [1, 2, 3].y : /x/i));
eval("var ev = 3; ev * 2");
}
var w = 2;
while (w > 0) {
w--;
function helper(item, acc) {
item += (function (u) {
return u;
})(item);
;
if (new.target) {
print('ctor');
}
return acc;
}
print(helper(undefined, null));
}
w = (function (u) {
return u;
})({ x0: w });
var key = function (...u) {
return u.length;
};
