var w1 = 1;
while (w1 > 0) {
w1--;
++w1;
}
eval("var ev = 3; ev * 2");
--w1;
eval("var ev = 3; ev * 2");
