print('0');
eval("var ev = 3; ev * 2");
;
print(0);
