print(1);
eval("var ev = 3; ev * 2");
;
print('');
{
;
}
;
var w = 0;
do {
w += 1;
} while (w < 3);
