var w4 = 0;
do {
w4 += 1;
} while (w4 < 4);
print(w4);
++w4;
w4 |= undefined;
