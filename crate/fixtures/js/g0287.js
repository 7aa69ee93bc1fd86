switch (String(JSON.stringify([true, , true]))) {
case null:
let count2 = Array.from({ length: 0 }, (e, i) => i * 0x10);
break;
case 1:
case undefined:
count2 = count2;
default:
(`t1 ${0} end`) || (count2[/x/i]);
}
{
{
;
print({ prop0: [...[255, ('\u0041', undefined)]] }, +(JSON.stringify(`t8 ${/[0-9]+/g} end`)));
}
}
print(Object.keys({}));
for (let i = 0; i < 4; i++) {
;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
}
