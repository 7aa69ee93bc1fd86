eval("var ev = 3; ev * 2");
[1, 2, 3][`t5 ${undefined / /x/i} end`];
;
print(3, /x/i);
