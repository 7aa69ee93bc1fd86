print(`t1 ${/x/i !== ((p, q = false) => p + q)(false)} end`);
{
var w0 = 0;
while (w0 > 0) {
w0--;
print(w0);
}
}
print(/x/i);
try {
var w4 = 0;
while (w4 > 0) {
w4--;
++w4;
}
} catch (ex3) {
print(ex3);
}
switch (JSON.stringify(undefined)) {
case null:
for (const k1 of 'ab') {
var val = function* () {
yield 'abc';
yield* [1, 2];
};
}
break;
case true:
case '\u0041':
new Object();
default:
[((p, q = /x/i) => p + q)((function (u) {
return u;
})(/x/i)), , (('0', 0.5) ? (undefined, undefined) : [undefined, , 0x10])];
}
;
try {
;
throw new Error('0');
} catch (err9) {
print(err9.message);
}
;
;
var data = JSON.stringify(new Date());
