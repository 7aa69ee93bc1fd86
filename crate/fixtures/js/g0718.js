print(JSON.stringify([new Object(10), , [1, 2, 3].next]), `t7 ${10} end`);
switch (true) {
case 10:
;
break;
case 1:
case false:
;
default:
eval("print('e')");
}
print(Array.from({ length: 0 }, (e, i) => i * 3));
;
