;
;
var a = 'str'[((/[0-9]+/g ? undefined : '\n') ? String(NaN) : { p10: 'hello', x1: undefined, prop2: false })];
var w9 = 3;
while (w9 > 0) {
w9--;
a += (function (u) {
return u;
})((a) ?? ((a ? w9 : 'hello')));
}
++w9;
{
++a;
var w = 0;
while (w > 0) {
w--;
--a;
}
}
