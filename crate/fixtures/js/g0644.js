var tmp8 = JSON.stringify((function (u) {
return u;
})(/x/i) * (true) && ('0'));
print(tmp8);
switch (JSON.stringify(Object.keys({}))) {
case 100:
;
break;
case false:
case /ab+c/:
++tmp8;
default:
eval("print('e')");
}
(Math.sqrt([1, 2, 3].next, String('\u0041')), [...[[...[tmp8, true]], tmp8]]);
;
