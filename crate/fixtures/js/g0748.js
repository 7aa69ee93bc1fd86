var w = 0;
do {
w += 1;
} while (w < 3);
;
print(new Set(), (w[(w ? w : w)] ? [1, 2, 3].value : ~(Object.keys({ a: 1 }))));
var flag0 = [((p, q = 'hello') => p + q)(w[w]), String.raw`a${['0', -1, w]}b`, [(w) && (false), , ("x" ? w : w)]];
((p, q = 'hello') => p + q)(w);
print(Array.from({ length: 3 }, (e, i) => i * 0.5));
function f(obj2, res3) {
for (var p5 in [1, 2]) {
;
}
switch (res3) {
case 3:
;
break;
case -1:
case undefined:
print('\n');
default:
print((res3, new Date()));
}
if (new.target) {
print('ctor');
}
return res3.length;
}
print(f(3, 0.5));
var { p0: str4 = 255, ...rest5 } = { x: 1 };
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue outer;
}
}
w = str4 < (w ? w : w) != w;
