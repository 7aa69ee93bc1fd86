print(-1);
;
var res8 = async function () {
return await 'a,b,c';
};
print(Object.keys({}), String(+({ x0: res8 })));
switch (String.raw`a${'str'[(function (u) {
return u;
})(res8)]}b`) {
case /[0-9]+/g:
var w = 1;
while (w > 0) {
w--;
{
res8 *= JSON.stringify(Array.from({ length: 4 }, (e, i) => i * 3));
res8 = JSON.stringify([({ x: 1, length: 2 }).prop, , ('abc' ? res8 : '0')]);
}
}
break;
case 'abc':
case 1:
const n1 = new Array(1);
default:
res8--;
}
;
try {
for (var p9 of [1, 2, 3]) {
print(typeof ([`t2 ${res8} end`]), `t4 ${((p, q = '0') => p + q)(/[0-9]+/g) & ((p, q = "x") => p + q)('a,b,c')} end`);
}
throw new TypeError('a,b,c');
} catch (ex) {
print(ex.message);
}
