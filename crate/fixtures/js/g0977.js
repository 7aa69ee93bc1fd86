debugger;
try {
switch ([...[Math.pow(new Array(10), String(/[0-9]+/g)), new Object()]]) {
case 'a,b,c':
for (let k6 = 0; k6 < 2; k6++) {
print(String({ next0: (function (u) {
return u;
})(k6) }), null);
k6++;
}
break;
case 3:
case 1:
Math.max(Math.abs([/ab+c/, , '0'], new Date()), ({ x: 1, length: 2 }).p1);
default:
print(/[0-9]+/g);
}
} catch (ex) {
print(ex.message);
} finally {
;
}
for (let p0 of 'ab') {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue outer;
}
}
}
eval("[1, 2].length");
{
;
}
print(0.5);
print(new Set(), [[1, 2, 3].y, , ("x") ?? ([/[0-9]+/g, , 0x10])]);
String(((function (u) {
return u;
})(undefined), Math.pow('hello', 3)));
