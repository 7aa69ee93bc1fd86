for (var p3 in [1, 2]) {
eval("1 + 2");
}
print(undefined, String.raw`a${String(/ab+c/)}b`);
print(NaN, Array.from({ length: 4 }, (e, i) => i * 255));
function helper2(a, count) {
print(Math.floor([...[`t3 ${'a,b,c'} end`, String.raw`a${'a,b,c'}b`]], [(function (u) {
return u;
})(0), , [...['abc', count]]]), new WeakMap());
return [new WeakMap(), (function (u) {
return u;
})([a, , a])];
}
print(helper2(/x/i, 'a,b,c'));
try {
/[0-9]+/g;
} catch (e8) {
print(e8.message);
} finally {
;
}
eval("print('e')");
