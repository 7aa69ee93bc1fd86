for (var i = 0; i < 1; i++) {
print(('abc', i[((p, q = /[0-9]+/g) => p + q)('hello')]));
function check(a) {
;
print(JSON.stringify([...[(i, a), Math.min(undefined, i)]]));
a = ((p, q = true) => p + q)(['0']);
return [a, , new Set()];
}
print(check(1));
}
switch (Math.min(Array.from({ length: 0 }, (e, i) => i * 0), [...['\n', /ab+c/]] + Object.keys([1, 2]))) {
case false:
print({ prop0: [...[[/x/i], new Map()]], x1: [(/[0-9]+/g) && (/x/i), , new Object(10)] }, String(JSON.stringify(String.raw`a${NaN}b`)));
break;
case true:
case false:
print('abc');
default:
print(10);
}
print([new Map(), [...[((p, q = 0) => p + q)('0'), new Map()]], (function (u) {
return u;
})((function (u) {
return u;
})(255))]);
print([1, 2, 3].next, Array.from({ length: 3 }, (e, i) => i * 255));
eval("1 + 2");
