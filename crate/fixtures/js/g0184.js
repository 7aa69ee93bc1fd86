'str'.prop;
var [acc9, , ...rest5] = [false, 2, 3];
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
print(new Object(10), [`t2 ${/ab+c/} end`, , true]);
}
acc9--;
acc9++;
try {
((String.raw`a${acc9}b`, { y0: acc9 }), Object.keys({}));
throw new RangeError("x");
} catch (err5) {
print(err5);
}
var w = 0;
do {
w += 1;
} while (w < 1);
var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
var obj8 = u => {
return u;
};
