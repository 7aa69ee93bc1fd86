eval("var ev = 3; ev * 2");
var key = (u, v = /x/i) => u + v;
const val = [{ p00: (Infinity, key), next1: /[0-9]+/g, x2: null }, , [JSON.stringify(key), , Math.sqrt(key, null)]];
eval("1 + 2");
Object.keys({ a: 1 });
switch (key[Math.max(String(key), String.raw`a${key}b`)]) {
case /ab+c/:
;
break;
case false:
case /[0-9]+/g:
print(key);
default:
key = (function (u) {
return u;
})(Math.min(key, key));
}
key = '\u0041';
