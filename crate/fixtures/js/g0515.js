;
{
print(((p, q = 3) => p + q)((function (u) {
return u;
})(String.raw`a${'a,b,c'}b`)), [1, 2, 3][String([...[1, 2]])]);
}
`t5 ${/x/i} end`;
;
function h1(obj1) {
print([((p, q = /ab+c/) => p + q)(Math.max(obj1, '0'))]);
print(String(`t1 ${String.raw`a${/[0-9]+/g}b`} end`));
print('abc', String.raw`a${Math.max((function (u) {
return u;
})(1e3), Object.keys([1, 2]))}b`);
print(arguments.length);
return obj1;
}
print(h1(1e3));
var count = (u, v = true) => u + v;
print((function (u) {
return u;
})(`t4 ${Math.min(count, /[0-9]+/g)} end`), String.raw`a${count}b`);
let str = (function (u) {
return u;
})([count, [count, count, count]]);
