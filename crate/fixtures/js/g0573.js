print((({ x: 1, length: 2 })[Array.from({ length: 2 }, (e, i) => i * 0.5)] ? `t6 ${/ab+c/} end` : `t7 ${(function (u) {
return u;
})('abc')} end`));
print(String(new Map()), ({ x: 1, length: 2 }).next);
var y = async function () {
return await false;
};
var { p0: x = 'hello', ...rest2 } = { x: 1 };
if (((x > /ab+c/) || ('0'), JSON.stringify(x))) {
if (Object.keys({})) {
try {
print(y, String((~(false)) && (undefined)));
} catch (ex) {
print(ex);
} finally {
x = ((((p, q = undefined) => p + q)('abc'), /[0-9]+/g), [String.raw`a${null}b`, , Math.pow(/ab+c/, x)]);
}
x--;
} else {
if (y.value) {
print([], "x");
x++;
eval("1 + 2");
} else {
y = JSON.stringify([new Set(), , String.raw`a${'abc'}b`]);
}
}
} else {
if (JSON.stringify((/[0-9]+/g ? undefined : /ab+c/)) > 'a,b,c') {
let b4 = { x0: (function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * -1)) };
for (const p8 in [1, 2]) {
eval("1 + 2");
}
y--;
}
}
