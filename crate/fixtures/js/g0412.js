try {
print(NaN);
} catch (ex9) {
print(ex9);
} finally {
print([[...[[/ab+c/, /[0-9]+/g], 'str'.y]], , (function (u) {
return u;
})(typeof (/ab+c/))], String.raw`a${true}b`);
}
print([...[0, new Object()]] != `t2 ${Array.from({ length: 3 }, (e, i) => i * 0x10)} end`, Array.from({ length: 0 }, (e, i) => i * 0.5));
eval("var ev = 3; ev * 2");
('abc') && (new Error(10));
if (new Map()) {
;
if ((function (u) {
return u;
})(String('str'.length))) {
if (~(255)) {
var key = { p10: ['\u0041', , 100], value1: 100 } % Math.floor([...[true, null]], [/[0-9]+/g, , true]);
} else {
String.raw`a${new WeakMap()}b`;
print(true);
}
} else {
if (Math.pow(Math.min(0, /[0-9]+/g) !== ({ x: 1, length: 2 })['hello'], Array.from({ length: 1 }, (e, i) => i * 1) >>> { next0: 100 })) {
;
} else {
print(/ab+c/);
}
eval("1 + 2");
}
}
