var acc9 = { prop0: ([...['hello', null]] ? Object.keys({ a: 1 }) : Math.round(/ab+c/, '0')), prop1: true, prop2: Array.from({ length: 0 }, (e, i) => i * 10) };
print(({ x: 1, length: 2 })[{ p00: new Set() }]);
print({ length0: new Error(3), y1: Object.keys({ a: 1 }), x2: JSON.stringify((acc9) && (0)) }, acc9);
;
--acc9;
if (new Error()) {
function test() {
new Object();
new Set();
acc9++;
if (new.target) {
print('ctor');
}
return 'str'['str'.x];
}
print(test());
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
++acc9;
} else {
acc9++;
}
{
var val7 = function (...u) {
return u.length;
};
}
acc9;
