let count = String((/x/i, (function (u) {
return u;
})(/x/i)));
var w9 = 0;
do {
w9 += 1;
} while (w9 < 1);
let m = [[], , ~({ prop0: true, value1: 10 })];
if ((m[m << w9] ? new Set() : w9[(w9, /[0-9]+/g)])) {
print(JSON.stringify(true));
print(m);
(m ? w9 : new Error());
} else {
print((Array.from({ length: 1 }, (e, i) => i * NaN), count), (String((false, count)) ? 'hello' : 2));
}
for (let k of [1, 2, 3]) {
switch ((Object.keys({ a: 1 }) ? Infinity : String(((p, q = 0) => p + q)(count)))) {
case /x/i:
if ({ prop0: count.prop }) {
m = m;
k = String.raw`a${String([/[0-9]+/g, count])}b`;
}
break;
case /ab+c/:
case '0':
w9++;
default:
const b2 = 'a,b,c';
}
}
w9--;
