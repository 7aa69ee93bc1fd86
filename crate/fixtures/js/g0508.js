for (let p of 'ab') {
for (var i = 0; i < 4; i++) {
switch (!(`t1 ${p[i]} end`)) {
case true:
p = i;
break;
case /x/i:
case false:
p = (function (u) {
return u;
})([String(''), , p]);
default:
['a,b,c', , Array.from({ length: 0 }, (e, i) => i * 1e3)];
}
eval("var ev = 3; ev * 2");
}
}
print("x");
eval("1 + 2");
print(/ab+c/);
;
print('a,b,c');
