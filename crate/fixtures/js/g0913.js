print(undefined);
;
var w9 = 3;
while (w9 > 0) {
w9--;
((p, q = "x") => p + q)(new Map()) + (function (u) {
return u;
})([...[undefined, /ab+c/]]);
}
w9++;
eval("print('e')");
var c = function (...u) {
return u.length;
};
var acc9 = u => {
return u;
};
for (const k of []) {
function wrap() {
print({ p10: new Map() });
eval("[1, 2].length");
k.x;
return k[Object.keys([1, 2])];
}
wrap();
}
for (var p in { a: 1, b: 2 }) {
c &= [w9.x];
}
