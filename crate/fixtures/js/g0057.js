;
{
if ([...[JSON.stringify((/[0-9]+/g, Infinity)), new Set()]]) {
print('\n');
} else {
print(/ab+c/);
eval("var ev = 3; ev * 2");
}
}
eval("print('e')");
eval("print('e')");
