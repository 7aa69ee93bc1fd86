{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
}
;
{
('abc') ?? (Array.from({ length: 2 }, (e, i) => i * NaN));
switch (Object.keys([1, 2])) {
case NaN:
'str'.p0;
break;
case 1e3:
case '':
print(NaN);
default:
;
}
}
switch ((function (u) {
return u;
})('str'[[...[1e3, /x/i]]])) {
case /ab+c/:
print(void (new Object()));
break;
case /ab+c/:
case false:
const z3 = new Object();
default:
print(false);
}
