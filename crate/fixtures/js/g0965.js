;
;
eval("print('e')");
print('\u0041');
var b5 = (u, v = undefined) => u + v;
++b5;
;
switch ((function (u) {
return u;
})([`t0 ${b5} end`])) {
case /x/i:
var [str, , ...rest2] = ['a,b,c', 2, 3];
break;
case null:
case -1:
--str;
default:
str = [...[Array.from({ length: 3 }, (e, i) => i * 2), (Math.floor(b5, ''), String('a,b,c'))]];
}
eval("print('e')");
{
(function (u) {
return u;
})([JSON.stringify(2), , JSON.stringify(b5)]);
print(new Object(0));
}
