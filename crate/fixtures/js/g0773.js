print(/[0-9]+/g);
var c9 = new Object();
print(JSON.stringify(`t7 ${({ x: 1, length: 2 })[c9]} end`));
JSON.stringify(new Error());
;
eval("print('e')");
;
print([]);
