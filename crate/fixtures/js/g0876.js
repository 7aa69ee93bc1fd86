let item8 = Array.from({ length: 4 }, (e, i) => i * NaN);
try {
{
--item8;
}
} catch (err3) {
print(err3);
} finally {
String(/x/i);
}
eval("print('e')");
try {
{
item8--;
item8 = "x";
}
throw new Error("x");
} catch (ex3) {
print(ex3.message);
}
for (var j = 0; j < 1; j++) {
print(String.raw`a${[(item8) || (/ab+c/), typeof (item8), [item8, 0.5]]}b`);
switch ({ p00: [...[String.raw`a${true}b`, ((p, q = 1) => p + q)(item8)]], value1: -(j), value2: ((function (u) {
return u;
})(/ab+c/) ? (null, 0.5) : (function (u) {
return u;
})(item8)) }) {
case false:
for (const p4 in { a: 1, b: 2 }) {
;
}
break;
case 1:
case null:
print(JSON.stringify('str'.length), /ab+c/);
default:
print(new Error(), ('str'[{ length0: item8, prop1: /[0-9]+/g, p02: item8 }] ? String.raw`a${item8}b` : (JSON.stringify(item8)) ?? (String.raw`a${true}b`)));
}
}
item8 = item8;
