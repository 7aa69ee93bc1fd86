var a1 = `t8 ${/x/i} end`;
String([[a1, , a1], , (a1 ? a1 : a1)]);
a1--;
var w = 0;
do {
w += 1;
} while (w < 2);
