{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
}
switch ((new WeakMap() ? '0' < (false, 2) : Object.keys({}))) {
case /ab+c/:
print(String(Array.from({ length: 3 }, (e, i) => i * 3)), JSON.stringify(JSON.stringify(/[0-9]+/g)));
break;
case '\u0041':
case /[0-9]+/g:
var item3 = ({ x: 1, length: 2 }).length;
default:
eval("[1, 2].length");
}
class A {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new A(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
print(A.make().value);
[3, , new Set()];
function run() {
print(JSON.stringify((String("x") ? (A) ?? ('') : String.raw`a${null}b`)), Array.from({ length: 0 }, (e, i) => i * 0.5));
try {
A--;
} catch (e) {
print(e.message);
} finally {
A -= [new Set(), , ((p, q = false) => p + q)(new WeakMap())];
}
JSON.stringify((Math.floor('', 'hello') ? JSON.stringify(A) : ~(/[0-9]+/g)));
return new Map();
}
print(run());
for (var k8 = 0; k8 < 4; k8++) {
print((Object.keys({}) ? '\n' : [new Map(), , [A, , 2]]));
k8++;
}
var z2 = Object.keys({ a: 1 });
var item = async function () {
return await /ab+c/;
};
for (let k9 of []) {
item = JSON.stringify(k9[((p, q = undefined) => p + q)(NaN)]);
}
