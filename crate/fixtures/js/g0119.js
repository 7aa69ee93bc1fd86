try {
const c5 = ({ x0: String('\n') } ? ((p, q = '') => p + q)([...[/ab+c/, /x/i]]) : new Date(10));
for (let k = 0; k < 5; k++) {
for (var j = 0; j < 4; j++) {
[1, 2, 3][(`t1 ${/[0-9]+/g} end`, c5 !== c5)];
--k;
}
;
}
} catch (ex0) {
print(ex0);
}
let val = new Object();
for (let i = 0; i < 2; i++) {
var w = 1;
while (w > 0) {
w--;
function test7(data9) {
eval("[1, 2].length");
val++;
data9 -= ([w]) && ([1, 2, 3][val != w]);
print(arguments.length);
return 1e3;
}
print(test7('abc'));
}
i = Object.keys([1, 2]);
}
if ([...[val < Math.round(val, 255), null]]) {
--val;
var a1 = function* () {
yield 'a,b,c';
yield* [1, 2];
};
a1 = [/[0-9]+/g, , ['\u0041', new Date(0), Array.from({ length: 3 }, (e, i) => i * 0.5)]];
}
try {
class Box {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box(/[0-9]+/g);
}
m1(a) {
return a + this.x;
}
}
print(Box.make().value);
if (-(String(Array.from({ length: 3 }, (e, i) => i * Infinity)))) {
var w7 = 3;
while (w7 > 0) {
w7--;
var arr8 = String(val);
}
print(((val ? w7 : 10) ? ((p, q = 1) => p + q)(val) : ["x", , w7]) >= (new Array(), (Box, 'abc')), new Date(3) < true);
}
throw new Error('');
} catch (err0) {
print(err0.message);
}
val += ({ x: 1, length: 2 })[Array.from({ length: 3 }, (e, i) => i * 0x10)];
for (const p of 'ab') {
val |= String.raw`a${String(Array.from({ length: 2 }, (e, i) => i * 0.5))}b`;
}
switch ((function (u) {
return u;
})(String.raw`a${new Map()}b`)) {
case /[0-9]+/g:
;
break;
case /x/i:
case 100:
val -= ((p, q = '0') => p + q)([...[[/x/i, val], void (0x10)]]);
default:
let key8 = [String.raw`a${null}b`, , (val.value) || (val[val])];
}
val--;
