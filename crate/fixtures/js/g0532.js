String(Math.min(('\n', undefined), 'abc'));
;
function run(val8, key8) {
for (let k9 = 0; k9 < 5; k9++) {
var val = String(((p, q = /ab+c/) => p + q)(((p, q = NaN) => p + q)(false)));
val = [{ p10: (val8 ? 10 : '\u0041'), prop1: (key8, "x"), p12: `t2 ${1} end` }];
}
function g0(m) {
--val8;
if (new.target) {
print('ctor');
}
print(arguments.length);
return (String.raw`a${val8}b`, String.raw`a${{ prop0: '\n' }}b`);
}
print(g0(3));
if (new.target) {
print('ctor');
}
print(arguments.length);
return String.raw`a${`t3 ${String(undefined)} end`}b`;
}
print(run(3, /ab+c/));
eval("var ev = 3; ev * 2");
for (const p in { a: 1, b: 2 }) {
{
switch (p[Object.keys({})]) {
case 1e3:
print(undefined);
break;
case '0':
case 10:
;
default:
const str = `t0 ${false} end`;
}
}
}
[1, 2, 3].p0;
print('');
