Object.keys({ a: 1 });
print((Math.round(({ x: 1, length: 2 }).value, new WeakMap()) ? ~(String(/[0-9]+/g)) : (10 ? -('a,b,c') : [0, , /ab+c/])), `t4 ${{ x0: /x/i !== /x/i, length1: Math.round(/ab+c/, 'hello') }} end`);
{
{
;
for (var k6 = 0; k6 < 4; k6++) {
++k6;
k6 = Object.keys({ a: 1 });
}
}
print(/ab+c/);
}
switch ([1, 2, 3].p1) {
case false:
;
break;
case '':
case -1:
var z2 = { prop0: { length0: true }, length1: ((p, q = false) => p + q)(new WeakMap()), p02: new Object() };
default:
;
}
