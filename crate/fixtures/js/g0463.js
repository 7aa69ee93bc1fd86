print(String((JSON.stringify(/[0-9]+/g), Math.pow(undefined, 0))));
print("x");
switch (typeof (Array.from({ length: 4 }, (e, i) => i * 100))) {
case Infinity:
print(Array.from({ length: 3 }, (e, i) => i * -1), 'str'.next);
break;
case undefined:
case /[0-9]+/g:
;
default:
eval("1 + 2");
}
print('');
var w = 0;
do {
w += 1;
} while (w < 3);
eval("var ev = 3; ev * 2");
