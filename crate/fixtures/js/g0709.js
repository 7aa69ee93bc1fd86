for (var k8 in { a: 1, b: 2 }) {
k8 &= JSON.stringify(k8);
}
for (const k of []) {
switch ([...[(function (u) {
return u;
})(((p, q = NaN) => p + q)('a,b,c')), Math.floor(k.x, [...[false, k]])]]) {
case /[0-9]+/g:
{
print(undefined);
}
break;
case '\n':
case undefined:
;
default:
print(/x/i);
}
}
print('\u0041');
;
print("x");
print(new Set());
print(/ab+c/);
function check() {
var z = u => {
return u;
};
z++;
if (new.target) {
print('ctor');
}
print(arguments.length);
return [...[`t4 ${(-1) ?? (/ab+c/)} end`, [0.5, , 10] === (255 ? z : -1)]];
}
print(check());
