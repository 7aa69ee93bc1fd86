var w = 0;
do {
w += 1;
} while (w < 3);
{
;
}
for (let j7 = 0; j7 < 3; j7++) {
w = (function (u) {
return u;
})(w[('\n' ? j7 : undefined)]);
eval("print('e')");
}
if (((p, q = NaN) => p + q)(String.raw`a${new Set()}b`)) {
const z = w;
} else {
for (let k = 0; k < 3; k++) {
function g() {
w = w[[w, , new Error()]];
k++;
void (k);
return k;
}
print(g());
switch ([JSON.stringify(g()), `t5 ${k} end`, Array.from({ length: 2 }, (e, i) => i * 10)]) {
case 'hello':
w--;
break;
case undefined:
case undefined:
k = JSON.stringify([[w, 0x10, true], Object.keys({ a: 1 })]);
default:
print(w.p0, Object.keys({ a: 1 }));
}
}
String.raw`a${[...[(function (u) {
return u;
})(w), ['\n', , w]]]}b`;
}
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(0);
}
m2(a) {
return a + this.x;
}
}
print(Derived.make().value);
