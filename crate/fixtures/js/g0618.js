var w3 = 0;
do {
w3 += 1;
} while (w3 < 2);
++w3;
Array.from({ length: 4 }, (e, i) => i * Infinity);
++w3;
