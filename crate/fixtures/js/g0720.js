;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
function make() {
;
switch ('abc') {
case 'abc':
print(new Map());
break;
case undefined:
case 100:
Object.keys({});
default:
'\n';
}
const res9 = (((p, q = false) => p + q)([1, 2, 3][true]) ? (function (u) {
return u;
})(['hello', , '0']) : (function (u) {
return u;
})(((p, q = 'a,b,c') => p + q)(/ab+c/)));
if (new.target) {
print('ctor');
}
return +((res9 ? /ab+c/ : 'str'[0]));
}
print(make());
print(([1, 2, 3].x, null));
var z5 = { z5, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
