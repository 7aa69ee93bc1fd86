var tmp6 = (u, v = true) => u + v;
eval("print('e')");
++tmp6;
++tmp6;
