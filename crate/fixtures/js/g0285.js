'a,b,c';
(Math.pow(String('abc'), JSON.stringify(3)), JSON.stringify(new Error()));
print(Array.from({ length: 0 }, (e, i) => i * 1e3), (JSON.stringify(/x/i)) ?? (typeof (Math.pow(true, 'a,b,c'))));
;
switch (Object.keys([1, 2])) {
case false:
eval("var ev = 3; ev * 2");
break;
case false:
case 3:
Infinity / /x/i / /x/i | (100 ? Array.from({ length: 2 }, (e, i) => i * 100) : ({ x: 1, length: 2 })[/x/i]);
default:
;
}
;
print(undefined);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break;
}
}
print('\n');
var key5 = u => {
return u;
};
