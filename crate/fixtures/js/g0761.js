function run6(b6, obj) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue outer;
}
}
return b6;
}
print(run6('hello', /ab+c/));
print(['str'['str'[false]], , '\u0041']);
{
var w = 0;
do {
w += 1;
} while (w < 4);
w |= Math.floor({ p10: w, p11: '', x2: false } == (w ? 'hello' : 10), (1e3 ? true : w) - run6(true, w));
}
print(3);
print(String('0'));
