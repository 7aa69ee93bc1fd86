;
switch (String(({ x: 1, length: 2 }).next)) {
case 255:
;
break;
case 1:
case null:
const c7 = (Object.keys({ a: 1 }), [...[10, Math.floor(/ab+c/, null)]]);
default:
print('\n');
}
print('0');
for (let i9 = 0; i9 < 1; i9++) {
--i9;
++i9;
}
;
for (var k6 of []) {
for (var k9 = 0; k9 < 3; k9++) {
const val2 = -(new Object(0));
for (var k4 in { a: 1, b: 2 }) {
print(Math.min(new Set(), [/[0-9]+/g, , k9]) << JSON.stringify({ y0: k6, p01: k4 }), (function (u) {
return u;
})((`t5 ${k6} end`, String(k4))));
}
}
}
const key7 = String(((true ? Infinity : NaN), []));
var x0 = (function (u) {
return u;
})(Object.keys({ a: 1 })) * [];
x0 -= [[String.raw`a${'abc'}b`, , Object.keys({ a: 1 })], , (function (u) {
return u;
})(new Map())];
print([...[100, Object.keys({})]]);
