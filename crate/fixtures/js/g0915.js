var w = 0;
do {
w += 1;
} while (w < 1);
eval("print('e')");
w++;
w = '\u0041';
w = w[/[0-9]+/g];
for (var k2 of [1, 2, 3]) {
;
}
;
