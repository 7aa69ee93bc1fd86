try {
var arr4 = ((function (u) {
return u;
})({ value0: /ab+c/, x1: undefined, value2: null }), `t4 ${JSON.stringify(/ab+c/)} end`);
throw new RangeError('0');
} catch (ex) {
print(ex.message);
}
'str'[Math.min(Array.from({ length: 3 }, (e, i) => i * 0x10), { y0: 100 })];
{
(Infinity, 'str'['hello' >= true]);
}
new Object(0);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
let val9 = (String.raw`a${(true ? 2 : 3)}b`) || (null % new Map());
