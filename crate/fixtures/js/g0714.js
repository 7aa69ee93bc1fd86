for (const k6 of 'ab') {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break;
}
}
}
(function (u) {
return u;
})(new Array(3)) - Array.from({ length: 1 }, (e, i) => i * 3);
;
;
;
var x = new WeakMap();
((String(3) ? ({ x: 1, length: 2 })[null] : x) ? new Map() : `t2 ${JSON.stringify(255)} end`);
switch (x.x) {
case false:
switch (null) {
case undefined:
--x;
break;
case /x/i:
case 'abc':
--x;
default:
print(String.raw`a${x}b`);
}
break;
case false:
case -1:
debugger;
default:
print(x[[]]);
}
var z = async function () {
return await 0x10;
};
const data2 = (((p, q = '\n') => p + q)((undefined) ?? (z)) ? Object.keys({ a: 1 }) : x);
print(Array.from({ length: 3 }, (e, i) => i * 0.5), new Object(0));
