function f() {
print(true);
return +(typeof (-(/x/i)));
}
print(f());
switch ({ x0: ((p, q = true) => p + q)(Object.keys({ a: 1 })), x1: [...[[/[0-9]+/g], (1e3, /[0-9]+/g)]], x2: (1e3, [...[/x/i, true]]) }) {
case 1:
{
for (const p1 in { a: 1, b: 2 }) {
print(String.raw`a${Object.keys({})}b`, ({ x: 1, length: 2 })[Object.keys([1, 2])]);
}
}
break;
case true:
case 'a,b,c':
print(null);
default:
const item = (new Object()) || (String.raw`a${(3) ?? (/[0-9]+/g)}b`);
}
const z7 = ((p, q = /[0-9]+/g) => p + q)(new WeakMap());
print(/x/i);
for (const k in [1, 2]) {
print([!(f('0')), z7.x], Object.keys([1, 2]));
}
;
({ x0: ~(String(z7)) });
