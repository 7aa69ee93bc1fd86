print(/x/i);
if (((p, q = 1) => p + q)({ prop0: NaN, next1: /x/i, length2: 100 } << String.raw`a${100}b`)) {
try {
switch (0.5) {
case /ab+c/:
print(new WeakMap());
break;
case "x":
case '0':
eval("[1, 2].length");
default:
;
}
eval("var ev = 3; ev * 2");
throw new RangeError('abc');
} catch (err6) {
print(err6);
}
eval("var ev = 3; ev * 2");
var arr = async function () {
return await Infinity;
};
} else {
var w8 = 3;
while (w8 > 0) {
w8--;
;
}
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) continue;
}
}
}
debugger;
var flag = u => {
return u;
};
eval("var ev = 3; ev * 2");
for (let p0 of [1, 2, 3]) {
var w3 = 1;
while (w3 > 0) {
w3--;
w3--;
}
}
flag--;
flag |= ('str'.length ? String.raw`a${String(flag)}b` : void (((p, q = 'a,b,c') => p + q)(flag)));
flag = true;
;
