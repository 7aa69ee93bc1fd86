print(new Error());
;
try {
for (var j2 = 0; j2 < 4; j2++) {
++j2;
switch ([]) {
case null:
;
break;
case '\n':
case undefined:
j2 = { next0: Array.from({ length: 2 }, (e, i) => i * 3) };
default:
j2 = [~(j2), String('hello')];
}
}
throw new RangeError('hello');
} catch (ex0) {
print(ex0);
} finally {
function compute1(x2, b6) {
++x2;
b6 = new Date();
print([...[[~(b6), , ((p, q = '') => p + q)(x2)], ((p, q = /x/i) => p + q)(('a,b,c') ?? (null))]], new WeakMap());
return [...[[x2.value, x2, [false]], x2.y]];
}
print(compute1(100, /x/i));
}
var w = 1;
while (w > 0) {
w--;
w += JSON.stringify(new Error(3));
}
