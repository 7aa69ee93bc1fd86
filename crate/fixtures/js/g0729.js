print({ length0: 'a,b,c' << null > (/[0-9]+/g, "x"), length1: ({ x: 1, length: 2 })[/ab+c/] });
for (var k8 in { a: 1, b: 2 }) {
k8--;
}
for (var j1 = 0; j1 < 3; j1++) {
for (let k1 in [1, 2]) {
eval("print('e')");
}
j1--;
}
eval("1 + 2");
;
