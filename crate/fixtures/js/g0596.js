switch (String(JSON.stringify("x")) !== 0x10) {
case NaN:
;
break;
case null:
case null:
print(!([...[true, /x/i]] << /x/i));
default:
print(false);
}
function check(c7) {
function make(x5) {
print('\n', x5);
x5 = /x/i;
++x5;
print(arguments.length);
return ([`t7 ${c7} end`] ? (`t8 ${c7} end` ? ("x" ? x5 : Infinity) : [10]) : Array.from({ length: 4 }, (e, i) => i * 2));
}
print(make(100));
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) continue;
}
}
if (new.target) {
print('ctor');
}
return Array.from({ length: 0 }, (e, i) => i * -1);
}
check('abc');
switch ([Object.keys([1, 2]), , Math.sqrt(String.raw`a${null}b`, Math.sqrt(1e3, Infinity))]) {
case undefined:
function compute(val, z8) {
z8 = [val["x"] >> val, , String.raw`a${['abc', , z8]}b`];
print(z8[String(val[z8])], Object.keys({ a: 1 }));
let tmp = Math.round(NaN - z8 < 'hello' < NaN, (function (u) {
return u;
})(`t3 ${val} end`));
if (new.target) {
print('ctor');
}
print(arguments.length);
return (/ab+c/, new Set());
}
compute(/[0-9]+/g, null);
break;
case /x/i:
case 'abc':
var m = [~((true) || (null)), 'str'[(false ? 100 : 0x10)], [...[compute(undefined), null]]];
default:
print(m);
}
try {
;
} catch (err3) {
print(err3.message);
}
;
const flag = [...[(function (u) {
return u;
})((1e3 ? -1 : null)), (String.raw`a${/[0-9]+/g}b`) && ("x")]];
;
;
let a4 = new Set();
