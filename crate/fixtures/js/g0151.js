var w = 0;
do {
w += 1;
} while (w < 4);
w--;
debugger;
debugger;
switch ((function (u) {
return u;
})([true, , { y0: '', prop1: w }])) {
case false:
switch (w) {
case /x/i:
var w18 = 0;
do {
w18 += 1;
} while (w18 < 2);
break;
case 2:
case '':
print(w18);
default:
"x";
}
break;
case 3:
case null:
var n = 100;
default:
eval("[1, 2].length");
}
print(new Object());
new Array(1);
var w6 = 0;
do {
w6 += 1;
} while (w6 < 3);
