print((((p, q = /x/i) => p + q)(!(null))) ?? (/x/i));
var obj3 = [void (null % true)];
print(new Map());
print([new Array(10), , obj3]);
print(255);
print(10);
obj3 &= 'str'[Array.from({ length: 1 }, (e, i) => i * 2)];
obj3 |= ((p, q = 1) => p + q)(~([...[true, 'a,b,c']]));
print(obj3, String('\n'));
var str = 10;
for (var j = 0; j < 3; j++) {
switch ([...[obj3, `t0 ${/ab+c/} end`]]) {
case true:
var res = u => {
return u;
};
break;
case null:
case '\n':
print(String.raw`a${(/ab+c/ ? Object.keys({ a: 1 }) : Object.keys([1, 2]))}b`, [{ p00: j >= str }, , ((p, q = 0.5) => p + q)([res, str])]);
default:
++j;
}
function wrap(n4) {
print(false, ((p, q = 10) => p + q)(new Error()));
if (new.target) {
print('ctor');
}
print(arguments.length);
return new Map();
}
wrap(NaN);
}
