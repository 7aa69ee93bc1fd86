for (const p in { a: 1, b: 2 }) {
Math.max(((p, q = /ab+c/) => p + q)(NaN), p <= p) != Object.keys({ a: 1 });
}
print(((p, q = '0') => p + q)(String([1, 2, 3][/[0-9]+/g])), [1, 2, 3][({ x: 1, length: 2 }).p0]);
eval("var ev = 3; ev * 2");
for (var k9 in { a: 1, b: 2 }) {
if ((function (u) {
return u;
})(new Map())) {
for (let j = 0; j < 5; j++) {
j = /ab+c/;
k9 = [1, 2, 3][[k9[j], , Array.from({ length: 1 }, (e, i) => i * 1e3)]];
}
} else {
{
String.raw`a${Math.round(null, /ab+c/)}b` > String([k9, /[0-9]+/g, k9]);
k9--;
}
print((-([10, k9])) && (Object.keys({ a: 1 })), /ab+c/);
}
}
eval("[1, 2].length");
