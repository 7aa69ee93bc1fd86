;
;
const z = (JSON.stringify(JSON.stringify(/x/i)) ? (~("x"), ((p, q = 'abc') => p + q)(true)) : [1, 2, 3].prop);
eval("print('e')");
;
if ('str'.next) {
var w = 2;
while (w > 0) {
w--;
w++;
}
}
eval("1 + 2");
function f() {
[1, 2, 3].prop;
String.raw`a${Array.from({ length: 0 }, (e, i) => i * 0)}b`;
print(arguments.length);
return ((Array.from({ length: 4 }, (e, i) => i * 255) ? z[''] : z)) && (`t1 ${new Object(0)} end`);
}
print(f());
var [z4, , ...rest] = [true, 2, 3];
