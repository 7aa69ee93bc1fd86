var w9 = 1;
while (w9 > 0) {
w9--;
--w9;
}
var w = 2;
while (w > 0) {
w--;
function f0(data6) {
print({ next0: 'str'.length });
data6 = JSON.stringify(Object.keys([1, 2]));
w9++;
if (new.target) {
print('ctor');
}
print(arguments.length);
return `t1 ${[({ x: 1, length: 2 })[/[0-9]+/g], (w9) || (/x/i)]} end`;
}
print(f0(null));
}
switch (w9.p1) {
case 'a,b,c':
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break;
}
}
break;
case /ab+c/:
case false:
eval("1 + 2");
default:
;
}
var w3 = 0;
do {
w3 += 1;
} while (w3 < 1);
var item6 = JSON.stringify(new Array(1));
w3--;
