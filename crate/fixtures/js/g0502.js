print(((p, q = undefined) => p + q)(({ x: 1, length: 2 })[/x/i]), Math.floor(NaN, 'hello'));
print([1, 2, 3][new Array()], ('0') && (void (String(0.5))));
eval("[1, 2].length");
[1, 2, 3].x;
try {
print((function (u) {
return u;
})(String(String.raw`a${'\u0041'}b`)));
(function (u) {
return u;
})(undefined);
} catch (ex) {
print(ex);
} finally {
print((new Array(10)) && (undefined), [...[JSON.stringify(-('hello')), ((p, q = 0x10) => p + q)(/ab+c/)]]);
}
