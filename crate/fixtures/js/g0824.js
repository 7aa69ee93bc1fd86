var w = 1;
while (w > 0) {
w--;
w--;
}
let c3 = +(`t2 ${[true, , null]} end`);
print([[...[-1, /x/i]] | { p10: c3, length1: 0x10, length2: '0' }, , '0'], 0.5);
for (const k in [1, 2]) {
c3 -= (JSON.stringify((true) || (k))) && (((p, q = 10) => p + q)(w.next));
}
var data = u => {
return u;
};
var w37 = 0;
do {
w37 += 1;
} while (w37 < 4);
