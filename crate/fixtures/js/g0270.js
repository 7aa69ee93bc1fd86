switch (String.raw`a${false}b`) {
case /[0-9]+/g:
print((JSON.stringify(false), String([])));
break;
case "x":
case 1:
eval("1 + 2");
default:
print(1);
}
;
;
var w7 = 0;
do {
w7 += 1;
} while (w7 < 1);
var w = 1;
while (w > 0) {
w--;
print({ prop0: (w, { x0: /[0-9]+/g, y1: w7, x2: w }), length1: (w7 ? Math.abs(undefined, w) : void (/ab+c/)) }, (`t5 ${new WeakMap()} end`, (w7 ? { prop0: Infinity } : w.value)));
}
w7 = w7;
