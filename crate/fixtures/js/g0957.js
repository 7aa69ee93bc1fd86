{
;
var w0 = 3;
while (w0 > 0) {
w0--;
var w7 = 0;
do {
w7 += 1;
} while (w7 < 4);
}
}
var w = 0;
do {
w += 1;
} while (w < 1);
var w29 = 0;
while (w29 > 0) {
w29--;
w29 &= String(Object.keys({}));
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) break outer;
}
}
if (void ([JSON.stringify(true), , 'abc'])) {
function helper2(tmp6, acc) {
tmp6--;
return (function (u) {
return u;
})(new WeakMap());
}
print(helper2(/ab+c/, /x/i));
}
switch (w29 < Array.from({ length: 3 }, (e, i) => i * 0)) {
case /[0-9]+/g:
var w6 = 3;
while (w6 > 0) {
w6--;
switch (String(String.raw`a${Math.round(w6, 1)}b`)) {
case 100:
w--;
break;
case true:
case Infinity:
;
default:
debugger;
}
}
break;
case null:
case undefined:
--w6;
default:
var item8 = new Date();
}
w = new Array();
for (var k8 of []) {
++k8;
}
'str'[String(JSON.stringify(w))];
w29 *= w29;
var a = async function () {
return await /[0-9]+/g;
};
