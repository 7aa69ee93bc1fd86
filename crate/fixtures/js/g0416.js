;
;
print(0x10);
{
eval("1 + 2");
}
{
switch (Math.floor(new Array(), +(JSON.stringify(undefined)))) {
case /x/i:
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break outer;
}
}
break;
case /ab+c/:
case 1:
;
default:
;
}
eval("[1, 2].length");
}
print([...[/[0-9]+/g, Object.keys({ a: 1 })]], String.raw`a${false}b`);
print(('a,b,c', true));
