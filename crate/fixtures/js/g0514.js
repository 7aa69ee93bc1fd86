for (var p0 of [1, 2, 3]) {
p0.value;
}
'a,b,c';
eval("1 + 2");
print(/ab+c/);
print(true);
