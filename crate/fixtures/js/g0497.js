;
`t0 ${(true, 1e3)} end` > ((NaN) && (undefined) ? [Infinity, undefined, -1] : new WeakMap());
try {
if ('str'[String.raw`a${`t1 ${100} end`}b`]) {
;
} else {
var data = 100;
/x/i;
}
;
throw new Error("x");
} catch (e5) {
print(e5.message);
}
for (var p7 in [1, 2]) {
let item = +((function (u) {
return u;
})(p7 === '\u0041'));
}
for (let k of [1, 2, 3]) {
function h(res) {
++k;
if (new.target) {
print('ctor');
}
print(arguments.length);
return `t6 ${String(String.raw`a${k}b`)} end`;
}
print(h('\u0041'));
}
function check0() {
switch ((function (u) {
return u;
})('str'[(/x/i, 'a,b,c')])) {
case 0x10:
print(new Date(), ((p, q = undefined) => p + q)((((p, q = true) => p + q)(/x/i)) || (new Map())));
break;
case '0':
case /[0-9]+/g:
print(undefined);
default:
;
}
var w = 0;
do {
w += 1;
} while (w < 4);
eval("1 + 2");
return ((p, q = NaN) => p + q)(w[(w, null)]);
}
print(check0());
print([[((p, q = '\u0041') => p + q)(/x/i), (/ab+c/ ? '0' : undefined), Math.max(/[0-9]+/g, undefined)], { prop0: [Infinity, ''], y1: (false, /[0-9]+/g), x2: ['\n', , '\u0041'] }, new Set()]);
{
print(undefined);
for (let i = 0; i < 3; i++) {
if ((/x/i) ?? ('')) {
var m5 = `t7 ${i} end` << [(i ? i : i), , (i, i)];
print([...[new Map(), String(`t1 ${1e3} end`)]]);
var b2 = i;
}
[...[`t6 ${String(/x/i)} end`, (('a,b,c') || (/ab+c/), i.p1)]];
}
}
