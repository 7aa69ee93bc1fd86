print(/[0-9]+/g);
{
const val = ('str'.value ? Math.min((function (u) {
return u;
})(undefined), (/ab+c/ ? '\n' : null)) : new Map());
const str = (function (u) {
return u;
})(((p, q = 2) => p + q)([val, , val]));
}
function make(key2) {
eval("print('e')");
function run5() {
key2++;
return (Array.from({ length: 0 }, (e, i) => i * 0x10)) && ((function (u) {
return u;
})(['abc']));
}
print(run5());
if (new.target) {
print('ctor');
}
print(arguments.length);
return String.raw`a${String([...[key2, undefined]])}b`;
}
print(make(10));
;
