print(String.raw`a${String(Math.max('hello', true))}b`);
print(0x10);
if (void (((p, q = undefined) => p + q)(255))) {
print('a,b,c');
;
} else {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) continue;
}
}
}
print((2) && (Array.from({ length: 2 }, (e, i) => i * 0.5)), ((p, q = 'hello') => p + q)(({ x: 1, length: 2 }).next));
switch (([(function (u) {
return u;
})('abc')] ? new WeakMap() : '')) {
case /[0-9]+/g:
var item = function (...u) {
return u.length;
};
break;
case undefined:
case 0x10:
print((Math.floor((item) ?? (/ab+c/), undefined)) && (item));
default:
++item;
}
print({ prop0: new Object(), value1: ['a,b,c', , (/[0-9]+/g, 1)], length2: ([...[3, /[0-9]+/g]]) && (String(/[0-9]+/g)) });
;
;
let z3 = String.raw`a${[null != /ab+c/, , [undefined, 0x10, /[0-9]+/g]]}b`;
