;
eval("var ev = 3; ev * 2");
print(-1);
print(null);
