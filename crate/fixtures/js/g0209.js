function h(tmp1) {
tmp1 = [((p, q = 1e3) => p + q)(10), , [tmp1] != undefined];
try {
eval("1 + 2");
} catch (e7) {
print(e7);
}
print(Array.from({ length: 3 }, (e, i) => i * 10));
return (new WeakMap() ? `t7 ${false} end` : Array.from({ length: 2 }, (e, i) => i * -1));
}
print(h('\n'));
print(/x/i);
;
try {
switch ({ p10: JSON.stringify(Object.keys([1, 2])), y1: /ab+c/ }) {
case undefined:
print(0x10);
break;
case true:
case /ab+c/:
print(null);
default:
print(new Map(), ((-(10)) && (false)) && ([String.raw`a${/x/i}b`, null ^ /[0-9]+/g]));
}
let str = String(Math.min([...[/x/i, true]], Object.keys({})));
} catch (ex) {
print(ex);
}
;
