switch ([...[/x/i, ~(255)]]) {
case Infinity:
;
break;
case 3:
case '0':
const arr = ((p, q = /ab+c/) => p + q)((function (u) {
return u;
})(String.raw`a${'hello'}b`));
default:
print(`t3 ${Math.min((arr ? /ab+c/ : arr), (/[0-9]+/g) || ("x"))} end`, new Object(1));
}
eval("var ev = 3; ev * 2");
var w7 = 0;
do {
w7 += 1;
} while (w7 < 3);
print((function (u) {
return u;
})(((w7 ? w7 : w7)) ?? (Array.from({ length: 4 }, (e, i) => i * 0x10))), [...[((p, q = false) => p + q)(false), ({ x: 1, length: 2 }).value]]);
var { prop: res = /x/i, ...rest4 } = { x: 1 };
var w = 3;
while (w > 0) {
w--;
var val = { val, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
}
function test8(item, acc) {
[['str'[w7], [/[0-9]+/g, w, '\n'], w]];
print(arguments.length);
return item;
}
print(test8('abc', /ab+c/));
w7--;
w = { prop0: (String(res), ((p, q = null) => p + q)(undefined)), x1: test8((undefined) || (res), res) };
