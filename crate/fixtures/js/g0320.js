print(Infinity);
print(/x/i);
for (let k4 in { a: 1, b: 2 }) {
try {
switch (+(JSON.stringify([false, '\u0041']))) {
case null:
k4 = k4[(function (u) {
return u;
})(new WeakMap())];
break;
case /x/i:
case /ab+c/:
var c = ((p, q = -1) => p + q)([...[[...[undefined, /x/i]], 1]]);
default:
Array.from({ length: 1 }, (e, i) => i * 3);
}
throw new TypeError('\u0041');
} catch (ex) {
print(ex);
} finally {
k4++;
}
}
print(0.5);
