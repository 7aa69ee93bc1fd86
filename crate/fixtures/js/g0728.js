if ('a,b,c') {
try {
switch (((p, q = '\n') => p + q)(JSON.stringify(2))) {
case 1e3:
;
break;
case 'abc':
case /x/i:
print('0');
default:
({ x: 1, length: 2 })['str'.prop];
}
} catch (e) {
print(e.message);
}
print(NaN);
} else {
var w = 0;
do {
w += 1;
} while (w < 1);
}
print(false);
;
eval("print('e')");
([1, 2, 3].next ? ({ x: 1, length: 2 }).p1 : String.raw`a${/[0-9]+/g % false}b`);
function f4() {
eval("[1, 2].length");
print(arguments.length);
return [...[0, new Error(10)]];
}
f4();
;
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
