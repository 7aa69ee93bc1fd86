print(((p, q = 0.5) => p + q)(`t4 ${String('')} end`));
if (JSON.stringify(`t3 ${/ab+c/} end` * Object.keys([1, 2]))) {
switch (new Object(0)) {
case 255:
const item = null;
break;
case NaN:
case null:
print('0');
default:
;
}
} else {
print(({ x0: Array.from({ length: 3 }, (e, i) => i * -1), p01: [10, , "x"], prop2: `t6 ${undefined} end` }, 'str'.y), String(JSON.stringify(`t7 ${1} end`)));
}
print(typeof ('str'[String(0)]), JSON.stringify(JSON.stringify(('0' ? false : /ab+c/))));
for (var k1 in [1, 2]) {
print((String(new Array()) ? ((p, q = true) => p + q)(((p, q = -1) => p + q)(1)) : new Map()));
}
eval("print('e')");
print(255);
