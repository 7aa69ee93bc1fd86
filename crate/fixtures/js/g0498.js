function make4() {
const z6 = ((p, q = /[0-9]+/g) => p + q)(String.raw`a${[1, 2, 3].p0}b`);
try {
;
} catch (ex1) {
print(ex1.message);
}
function helper7() {
eval("1 + 2");
z6[new Error()];
String(z6[typeof (z6)]);
return z6;
}
helper7();
print(arguments.length);
return [helper7((function (u) {
return u;
})(z6), String.raw`a${z6}b`), -(JSON.stringify(1))];
}
print(make4());
{
eval("1 + 2");
}
{
var res8 = new Object();
;
}
print(['a,b,c', new Set(), (((p, q = '\u0041') => p + q)(/[0-9]+/g) ? 1e3 : make4('\u0041', /[0-9]+/g))]);
