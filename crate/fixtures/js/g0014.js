var w = 0;
do {
w += 1;
} while (w < 4);
if (w) {
--w;
} else {
w = [];
switch (w.prop) {
case 'hello':
try {
--w;
const b = ({ x: 1, length: 2 })[w];
} catch (ex) {
print(ex.message);
} finally {
[new WeakMap(), , w.p1 !== JSON.stringify(w)];
}
break;
case /x/i:
case 0:
w = w[w];
default:
String.raw`a${new Map()}b`;
}
}
[...[`t8 ${new Map()} end`, w]];
new Error();
w = [...[`t6 ${Object.keys({})} end`, null]];
eval("1 + 2");
w <<= /x/i;
var w8 = 0;
do {
w8 += 1;
} while (w8 < 3);
for (let p9 of [1, 2, 3]) {
var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
}
w = (function (u) {
return u;
})([[...[w8, w]], , String(w)]);
