switch (false) {
case null:
eval("print('e')");
break;
case 0:
case /ab+c/:
print(((/[0-9]+/g ? [...[true, '0']] : null / 255)) && (+([/ab+c/, /[0-9]+/g, null])));
default:
(function (u) {
return u;
})(({ length0: 2, length1: 0 }) ?? ((function (u) {
return u;
})(/x/i)));
}
var tmp6 = ((p, q = /x/i) => p + q)('str'[[...['\n', null]]]);
eval("[1, 2].length");
debugger;
;
;
print((function (u) {
return u;
})((function (u) {
return u;
})(Object.keys({ a: 1 }))));
tmp6--;
