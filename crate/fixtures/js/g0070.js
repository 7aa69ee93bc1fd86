eval("var ev = 3; ev * 2");
debugger;
for (var i = 0; i < 3; i++) {
i = (function (u) {
return u;
})(`t6 ${(i ? 1 : i)} end`);
if ((function (u) {
return u;
})(new Object())) {
try {
i = Array.from({ length: 3 }, (e, i) => i * 10);
undefined;
} catch (ex) {
print(ex);
} finally {
++i;
}
} else {
/ab+c/;
i++;
}
}
var acc = { acc, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
print((function (u) {
return u;
})([1, 2, 3][new Set()]));
Object.keys({});
try {
for (let j = 0; j < 1; j++) {
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 2) break outer;
}
}
{
print(JSON.stringify(new Map()), JSON.stringify(Math.pow(acc, 'a,b,c')) - /x/i);
}
}
} catch (e) {
print(e.message);
}
++acc;
for (let p0 in [1, 2]) {
{
switch (String.raw`a${((function (u) {
return u;
})(undefined), String(p0))}b`) {
case 100:
;
break;
case 'hello':
case false:
debugger;
default:
acc++;
}
}
}
