switch ([String([...[/[0-9]+/g, "x"]]), , (function (u) {
return u;
})(/x/i)]) {
case "x":
var w = 1;
while (w > 0) {
w--;
try {
w++;
w <<= w;
} catch (err8) {
print(err8.message);
}
}
break;
case undefined:
case '\n':
JSON.stringify((String(w), typeof (2)));
default:
w++;
}
print(0x10);
var w2 = 0;
do {
w2 += 1;
} while (w2 < 2);
String.raw`a${String.raw`a${w2}b`}b`;
['\u0041', , w2[Object.keys({})]];
{
const item = Object.keys([1, 2]);
}
for (var j6 = 0; j6 < 2; j6++) {
switch (String.raw`a${false}b` > `t1 ${j6} end` < new Date(0) + String.raw`a${''}b`) {
case 10:
{
w2--;
}
break;
case "x":
case '\u0041':
eval("print('e')");
default:
var res9 = String(w2) < (function (u) {
return u;
})(j6);
}
w2++;
}
w2 -= ((new Error(), 'str'[false])) && ((w2 ? String.raw`a${255}b` : 1e3 / w2));
