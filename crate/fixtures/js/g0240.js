print('');
function run(flag) {
switch (flag) {
case 0x10:
eval("print('e')");
break;
case false:
case 255:
print(String(([true], Math.min(flag, "x"))));
default:
print(new WeakMap(), flag);
}
flag &= ((p, q = /ab+c/) => p + q)((Array.from({ length: 3 }, (e, i) => i * 255) ? flag : (/ab+c/ ? '0' : 100)));
switch ('hello') {
case '0':
flag -= JSON.stringify(JSON.stringify([null, , 1]));
break;
case undefined:
case true:
flag -= ((p, q = 0.5) => p + q)([[flag, flag, flag], , Object.keys({ a: 1 })]);
default:
const x = Object.keys({ a: 1 });
}
if (new.target) {
print('ctor');
}
print(arguments.length);
return flag;
}
print(run(255));
;
print([]);
;
var w = 0;
do {
w += 1;
} while (w < 1);
if ((function (u) {
return u;
})(w | w) + ((p, q = 1) => p + q)(w) >>> Object.keys({ a: 1 })) {
;
}
