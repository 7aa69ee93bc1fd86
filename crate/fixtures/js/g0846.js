;
try {
var w = 1;
while (w > 0) {
w--;
;
}
throw new TypeError('\u0041');
} catch (err) {
print(err.message);
} finally {
try {
Array.from({ length: 2 }, (e, i) => i * 0);
throw new Error('');
} catch (e) {
print(e);
}
}
print(0);
print(false);
if (String(Object.keys([1, 2]))) {
print((function (u) {
return u;
})('str'.x), true);
}
print(10);
eval("var ev = 3; ev * 2");
{
print(/[0-9]+/g);
for (let j = 0; j < 3; j++) {
eval("[1, 2].length");
{
eval("[1, 2].length");
}
}
}
;
undefined;
