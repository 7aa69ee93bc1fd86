debugger;
;
;
print(/x/i);
print(undefined);
print('\n');
var res = { value0: Object.keys({}) };
var acc = JSON.stringify(((res ? res : res), res));
++acc;
var w4 = 2;
while (w4 > 0) {
w4--;
print((function (u) {
return u;
})(acc) & ((p, q = /x/i) => p + q)(`t5 ${255} end`), Object.keys({}));
}
for (var i = 0; i < 5; i++) {
var obj1 = function (...u) {
return u.length;
};
var flag3 = Math.sqrt(`t0 ${((p, q = 100) => p + q)(obj1)} end`, new Map());
}
