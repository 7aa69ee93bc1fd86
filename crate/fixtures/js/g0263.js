var data4 = (u, v = '\n') => u + v;
for (let p of 'ab') {
var str9 = JSON.stringify(String.raw`a${(data4) || (p)}b`);
}
switch (Array.from({ length: 0 }, (e, i) => i * -1)) {
case /x/i:
for (let k in [1, 2]) {
print(String.raw`a${(function (u) {
return u;
})(String.raw`a${''}b`)}b`);
}
break;
case 0:
case /ab+c/:
print(data4);
default:
let y = String.raw`a${Math.pow(data4[data4], `t3 ${10} end`)}b`;
}
data4++;
