print(/x/i);
eval("var ev = 3; ev * 2");
var w = 0;
do {
w += 1;
} while (w < 2);
switch ([]) {
case /ab+c/:
++w;
break;
case false:
case -1:
++w;
default:
w;
}
w++;
for (let k5 = 0; k5 < 1; k5++) {
k5 &= [[...[String(w), JSON.stringify(k5)]], , ((p, q = 'a,b,c') => p + q)(Array.from({ length: 4 }, (e, i) => i * 2))];
eval("print('e')");
}
w = (Object.keys({ a: 1 })) && (w);
