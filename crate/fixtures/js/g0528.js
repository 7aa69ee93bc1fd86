;
null;
eval("[1, 2].length");
true;
print(new Set());
print(Infinity);
;
;
try {
;
} catch (ex) {
print(ex);
}
var w = 0;
do {
w += 1;
} while (w < 1);
