function helper5(data1) {
eval("1 + 2");
data1 = `t4 ${((data1 ? /[0-9]+/g : data1) ? (function (u) {
return u;
})(data1) : String(false))} end`;
if (new.target) {
print('ctor');
}
return data1.x;
}
print(helper5('abc'));
var w9 = 0;
do {
w9 += 1;
} while (w9 < 2);
var w6 = 2;
while (w6 > 0) {
w6--;
w6--;
}
print(String(w6[!(undefined)]));
w9 = w9;
++w6;
;
switch (w6) {
case 100:
{
var w5 = 0;
do {
w5 += 1;
} while (w5 < 3);
}
break;
case /ab+c/:
case 10:
;
default:
const res = helper5(Array.from({ length: 1 }, (e, i) => i * Infinity));
}
w6 -= JSON.stringify(Math.pow(String.raw`a${0.5}b`, (function (u) {
return u;
})(Infinity)));
