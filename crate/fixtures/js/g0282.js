({ x: 1, length: 2 }).next;
;
if ([1, 2, 3][Array.from({ length: 3 }, (e, i) => i * 0)]) {
try {
var w = 0;
do {
w += 1;
} while (w < 1);
w &= [new Array(3)];
} catch (ex) {
print(ex.message);
} finally {
print((new Map()) ?? ([{ next0: 'a,b,c', y1: '\u0041', x2: '\u0041' }, Math.pow(undefined, '\u0041'), (/[0-9]+/g) ?? (null)]), Object.keys({}));
}
var w39 = 0;
do {
w39 += 1;
} while (w39 < 3);
print(w39);
}
print('0');
;
let flag7 = [];
flag7++;
