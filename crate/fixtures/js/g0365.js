;
function compute0() {
print(2);
print(arguments.length);
return "x";
}
print(compute0());
eval("var ev = 3; ev * 2");
print(undefined);
