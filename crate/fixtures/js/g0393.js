function make3() {
print(((p, q = '') => p + q)(String(((p, q = /ab+c/) => p + q)('abc'))), (function (u) {
return u;
})(JSON.stringify(String(2))));
if (new.target) {
print('ctor');
}
return ({ x: 1, length: 2 }).next;
}
print(make3());
;
print('\n');
new Date(1);
var w6 = 3;
while (w6 > 0) {
w6--;
;
}
{
[...[((p, q = false) => p + q)(!(undefined)), (make3(w6, true) ? ('' ? null : '') : [...[false, w6]])]];
}
