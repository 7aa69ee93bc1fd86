var flag6 = (new Set() ? ('str'[null]) ?? (Math.floor(100, 100)) : (function (u) {
return u;
})(1e3) | /ab+c/);
;
flag6 &= Array.from({ length: 2 }, (e, i) => i * 1);
++flag6;
flag6 -= Array.from({ length: 1 }, (e, i) => i * 0.5);
function f(n, acc) {
eval("1 + 2");
print(Object.keys({ a: 1 }), `t6 ${Math.min(flag6, acc == flag6)} end`);
{
n *= String.raw`a${({ x: 1, length: 2 })[/ab+c/]}b` ^ 'abc';
}
if (new.target) {
print('ctor');
}
return n;
}
print(f(3, /[0-9]+/g));
eval("1 + 2");
