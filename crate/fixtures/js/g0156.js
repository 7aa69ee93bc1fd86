;
;
switch (true) {
case /ab+c/:
print(0x10);
break;
case /[0-9]+/g:
case 0x10:
;
default:
print(Object.keys({ a: 1 }), Math.floor(((0, 10) ? JSON.stringify(false) : false), [((p, q = "x") => p + q)('0')]));
}
print('0');
