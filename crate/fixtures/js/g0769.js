print('\n');
for (var p4 of 'ab') {
print(Object.keys([1, 2]));
}
const flag1 = [((/[0-9]+/g) && (true), new Error()), , '0'];
var w = 0;
do {
w += 1;
} while (w < 4);
++w;
;
var w9 = 0;
while (w9 > 0) {
w9--;
w++;
}
