var w7 = 0;
do {
w7 += 1;
} while (w7 < 2);
function h(a, n8) {
switch (n8[[a, 'a,b,c']]) {
case false:
;
break;
case false:
case 'a,b,c':
a--;
default:
n8++;
}
print(new Date(), { y0: [...[String.raw`a${a}b`, new Error()]] });
(function (u) {
return u;
})(a.length);
print(arguments.length);
return n8;
}
h(/ab+c/, 10);
;
eval("print('e')");
;
;
var w1 = 0;
while (w1 > 0) {
w1--;
w7 &= { prop0: `t5 ${String.raw`a${w7}b`} end` };
}
