for (var k6 of [1, 2, 3]) {
switch (String((`t4 ${k6} end`) && ((function (u) {
return u;
})(/[0-9]+/g)))) {
case undefined:
function h3() {
print({ p00: ((p, q = /ab+c/) => p + q)([...[k6, 1]]) });
if (new.target) {
print('ctor');
}
return k6[JSON.stringify(10)] < [...[k6.x, Object.keys({ a: 1 })]];
}
print(h3());
break;
case '0':
case false:
;
default:
--k6;
}
}
var c3 = (false, +(-1));
switch (((function (u) {
return u;
})(new Object()) ? ((p, q = '') => p + q)((0.5, 2)) : Object.keys({}))) {
case /[0-9]+/g:
eval("var ev = 3; ev * 2");
break;
case /ab+c/:
case /ab+c/:
c3 -= `t3 ${Object.keys({ a: 1 })} end`;
default:
print(`t8 ${new Array(0)} end`);
}
var str1 = (u, v = /ab+c/) => u + v;
