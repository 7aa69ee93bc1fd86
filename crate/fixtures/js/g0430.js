((p, q = -1) => p + q)('str'.next);
for (let k = 0; k < 2; k++) {
function helper6(m) {
--m;
if (new.target) {
print('ctor');
}
print(arguments.length);
return { p00: Math.min((function (u) {
return u;
})(m), [k, k, "x"]) };
}
print(helper6('\u0041'));
let arr = Array.from({ length: 4 }, (e, i) => i * -1);
}
;
{
{
eval("1 + 2");
}
}
print('a,b,c');
