function check3(count, arr) {
var w = 0;
do {
w += 1;
} while (w < 3);
switch (({ value0: (1) || (true), p11: (count, "x") }) || (new Object())) {
case 3:
Math.min(new WeakMap(), ((w) && (/[0-9]+/g) ? `t4 ${count} end` : []));
break;
case '\n':
case true:
count--;
default:
w = JSON.stringify(w);
}
print(arguments.length);
return `t8 ${'hello'} end`;
}
print(check3(null, 1));
print(Array.from({ length: 1 }, (e, i) => i * 0x10), new Object());
debugger;
'\u0041';
print(1);
for (let k4 = 0; k4 < 5; k4++) {
++k4;
k4 = String.raw`a${JSON.stringify(new Error())}b`;
}
