for (let i = 0; i < 4; i++) {
var w = 0;
while (w > 0) {
w--;
eval("[1, 2].length");
}
if (!(Math.floor('0', [...[w, i]]))) {
++i;
for (var k1 = 0; k1 < 5; k1++) {
w = null;
new Array(0);
}
++w;
}
}
{
print("x");
}
;
var key2 = (u, v = /x/i) => u + v;
key2 &= [...[(new Error()) && (Math.round(undefined, undefined)), [...[new Error(), null >>> key2]]]];
key2++;
eval("1 + 2");
--key2;
