eval("[1, 2].length");
eval("[1, 2].length");
try {
print(false);
} catch (ex) {
print(ex.message);
} finally {
[[Math.max(0.5, /x/i), !(/ab+c/)]];
}
try {
var str = [1, 2, 3].p0 % JSON.stringify(String(10));
function run7(data0, val0) {
eval("var ev = 3; ev * 2");
return (function (u) {
return u;
})((val0 ? /[0-9]+/g : 0) == -(Infinity));
}
print(run7(NaN, '\u0041'));
} catch (err) {
print(err.message);
}
print('\n');
