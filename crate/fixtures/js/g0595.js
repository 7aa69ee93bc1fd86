print(NaN);
try {
print(10, JSON.stringify(Array.from({ length: 3 }, (e, i) => i * NaN)));
} catch (ex) {
print(ex);
}
switch (new Error()) {
case false:
switch (String(String.raw`a${`t8 ${/ab+c/} end`}b`)) {
case null:
print(String.raw`a${Object.keys({})}b`, (function (u) {
return u;
})(String.raw`a${[...[/[0-9]+/g, NaN]]}b`));
break;
case /[0-9]+/g:
case 'hello':
;
default:
print(String(0x10));
}
break;
case /x/i:
case 0.5:
print(null);
default:
var item6 = new Error(0);
}
Array.from({ length: 3 }, (e, i) => i * Infinity);
print(JSON.stringify('str'.next), (function (u) {
return u;
})(JSON.stringify(undefined)));
print([1, 2, 3].p0, /x/i);
new Object(0);
if (([1, 2, 3][(function (u) {
return u;
})(/x/i)], -(/x/i) + `t8 ${2} end`)) {
print(`t5 ${-((100, /x/i))} end`);
} else {
[String.raw`a${(/x/i) && (true)}b`, , new Error(3)];
if (/[0-9]+/g) {
new Set();
} else {
;
}
}
;
print(void ([typeof (null), , new Map()]));
