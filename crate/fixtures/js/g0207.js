function f(flag, obj) {
(new Date(1) ? (function (u) {
return u;
})([obj, , 100]) : [...[String.raw`a${null}b`, Array.from({ length: 1 }, (e, i) => i * 0)]]);
{
print(new WeakMap(), Math.max(~([...[/[0-9]+/g, '\n']]), String('\n' == obj)));
;
}
let item = flag;
print(arguments.length);
return JSON.stringify(JSON.stringify(undefined));
}
print(f(undefined, 100));
try {
;
throw new RangeError('hello');
} catch (e) {
print(e.message);
}
var w8 = 0;
do {
w8 += 1;
} while (w8 < 4);
w8 = JSON.stringify([1, 2, 3].prop);
Math.max(`t6 ${Object.keys({ a: 1 })} end`, (function (u) {
return u;
})(w8) ^ String(w8));
eval("var ev = 3; ev * 2");
;
try {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
function check() {
eval("var ev = 3; ev * 2");
;
return JSON.stringify(Object.keys({})) >= [new Array(), ((p, q = 0x10) => p + q)(w8)];
}
check();
} catch (ex) {
print(ex);
}
w8 += Array.from({ length: 0 }, (e, i) => i * 2);
