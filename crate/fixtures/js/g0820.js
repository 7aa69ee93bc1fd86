eval("[1, 2].length");
var w5 = 1;
while (w5 > 0) {
w5--;
var m7 = `t4 ${Math.min(w5, '\n')} end`;
}
w5;
++w5;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) break outer;
}
}
function h() {
print(/x/i, new Error());
return ((String.raw`a${true}b` ? Infinity : Object.keys({}))) ?? ((`t8 ${w5} end`) && (String(w5)));
}
h();
try {
function make(m9, tmp) {
print(String(Object.keys({})));
var acc0 = tmp;
if (new.target) {
print('ctor');
}
return [...[Array.from({ length: 0 }, (e, i) => i * 255), /x/i]];
}
print(make(-1, 'hello'));
eval("1 + 2");
} catch (err) {
print(err.message);
}
switch (new WeakMap() === ({ y0: 0x10 } ? `t4 ${w5} end` : w5.prop)) {
case /[0-9]+/g:
if (((p, q = 0) => p + q)(/ab+c/)) {
w5 = (function (u) {
return u;
})(h());
var tmp5 = function (...u) {
return u.length;
};
}
break;
case undefined:
case /ab+c/:
--w5;
default:
;
}
