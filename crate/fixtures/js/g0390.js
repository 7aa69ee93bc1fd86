for (var p of 'ab') {
print(new Set(), Array.from({ length: 3 }, (e, i) => i * 1e3));
}
;
if (false) {
var w = 0;
do {
w += 1;
} while (w < 4);
switch ([{ next0: null } | +(undefined), , (((p, q = 2) => p + q)('') ? new Date(3) : `t2 ${w} end`)]) {
case false:
w = (function (u) {
return u;
})(true) >= JSON.stringify(`t1 ${w} end`);
break;
case true:
case /[0-9]+/g:
print(String({ p00: '', y1: (function (u) {
return u;
})(100), p02: `t4 ${false} end` }), [...[[], (function (u) {
return u;
})([...[w, w]])]]);
default:
let tmp = Array.from({ length: 2 }, (e, i) => i * 2);
}
switch (([], w)) {
case /[0-9]+/g:
const m = String.raw`a${String.raw`a${void (1e3)}b`}b`;
break;
case 0.5:
case null:
w += String.raw`a${"x"}b`;
default:
[...[m, +(NaN)]];
}
} else {
const y = (new Map() ? !(Array.from({ length: 4 }, (e, i) => i * Infinity)) : /x/i);
switch (Math.min(String(Array.from({ length: 3 }, (e, i) => i * 2)), !(String(y)))) {
case 'a,b,c':
;
break;
case /x/i:
case /[0-9]+/g:
;
default:
print(true);
}
}
print(false, []);
;
print(null);
