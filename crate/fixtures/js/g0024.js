;
try {
;
throw new Error('\n');
} catch (e6) {
print(e6.message);
}
{
print(null);
eval("1 + 2");
}
;
eval("1 + 2");
switch (String([1, 2, 3].next) << (function (u) {
return u;
})(JSON.stringify(null))) {
case Infinity:
;
break;
case /[0-9]+/g:
case /x/i:
print([...[Math.floor(Math.pow(null, /[0-9]+/g), String.raw`a${true}b`), new Object(1)]]);
default:
eval("print('e')");
}
let count = Object.keys([1, 2]);
const x5 = ((p, q = 3) => p + q)(Math.max(count[count], (function (u) {
return u;
})(-1)));
switch ([[(function (u) {
return u;
})(0)], new Array(1), /[0-9]+/g]) {
case true:
if (Math.floor((0x10 ? String.raw`a${'\n'}b` : { y0: count, p11: '', next2: x5 }), [Array.from({ length: 0 }, (e, i) => i * 0), , !(count)])) {
count--;
count++;
} else {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break outer;
}
}
}
break;
case 0.5:
case /x/i:
;
default:
const acc = [...[String.raw`a${[x5, x5]}b`, Array.from({ length: 2 }, (e, i) => i * 10)]];
}
