;
print(/x/i);
;
print(new Map(), JSON.stringify(/[0-9]+/g));
var w4 = 0;
do {
w4 += 1;
} while (w4 < 2);
