switch (/x/i) {
case /[0-9]+/g:
switch ({ prop0: 1, y1: [`t7 ${/x/i} end`, , (/[0-9]+/g) ?? (true)] }) {
case null:
print((`t6 ${Object.keys({})} end`) || (Array.from({ length: 2 }, (e, i) => i * Infinity)));
break;
case /ab+c/:
case 10:
const a = /[0-9]+/g;
default:
;
}
break;
case 'a,b,c':
case null:
print(null);
default:
eval("1 + 2");
}
var str = async function () {
return await 0x10;
};
str = Math.min((JSON.stringify(100), { next0: Infinity, p01: str, length2: false }), JSON.stringify(new WeakMap()));
var z = String([-(undefined)]);
str++;
switch (str) {
case /x/i:
((p, q = 0x10) => p + q)({ p10: String(z), x1: Object.keys([1, 2]), x2: [...[str, undefined]] });
break;
case "x":
case /[0-9]+/g:
z = `t4 ${Math.pow((false ? z : /ab+c/), String.raw`a${z}b`)} end`;
default:
--z;
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
