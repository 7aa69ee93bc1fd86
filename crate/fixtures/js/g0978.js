;
function test(res, str7) {
str7 = Array.from({ length: 1 }, (e, i) => i * 0.5);
for (var k5 of 'ab') {
;
}
return String.raw`a${-1}b`;
}
print(test('', 10));
for (let p in [1, 2]) {
let obj = Object.keys({});
}
var w2 = 0;
while (w2 > 0) {
w2--;
w2 <<= new Array();
}
