var w1 = 2;
while (w1 > 0) {
w1--;
;
}
print(({ x: 1, length: 2 }).prop, Math.pow(String.raw`a${(function (u) {
return u;
})(2)}b`, -(['a,b,c', , w1])));
print([Math.floor(w1, [w1, , null]), , [w1, , 0x10] % String.raw`a${false}b`], String.raw`a${Math.abs({ x0: '\n', y1: w1, p12: 0x10 }, w1)}b`);
{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
}
for (var j = 0; j < 4; j++) {
for (let p in { a: 1, b: 2 }) {
function test5() {
eval("[1, 2].length");
print(arguments.length);
return (p) || (JSON.stringify((function (u) {
return u;
})(j)));
}
print(test5());
}
++w1;
}
w1.next;
w1 = new Array();
print(w1.value);
w1 <<= [1, 2, 3].prop;
