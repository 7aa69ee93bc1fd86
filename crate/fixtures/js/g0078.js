print('hello');
print(String("x"), [Math.max('hello', (0, 2))]);
switch (true) {
case undefined:
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue outer;
}
}
break;
case 0:
case /[0-9]+/g:
print([]);
default:
;
}
;
for (let j = 0; j < 3; j++) {
if (String([`t2 ${false} end`, { next0: j }])) {
eval("[1, 2].length");
switch ([((p, q = /x/i) => p + q)(j), (function (u) {
return u;
})(new Array())]) {
case false:
;
break;
case null:
case NaN:
print((-(Object.keys({ a: 1 })) ? (String(j), 'str'[/[0-9]+/g]) : j[0] == 'str'.p1), [[1, 2, 3][10 >>> j], , [[], , (j ? /x/i : /[0-9]+/g)]]);
default:
j = void (Array.from({ length: 2 }, (e, i) => i * 3) <= j);
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 3);
}
;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
String.raw`a${/ab+c/}b`;
