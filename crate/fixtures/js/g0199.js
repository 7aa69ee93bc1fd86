var w = 0;
do {
w += 1;
} while (w < 4);
print(100, ([]) || (String(String.raw`a${w}b`)));
w = new WeakMap();
print((((p, q = /ab+c/) => p + q)({ value0: w, p01: /ab+c/ }), w));
for (let p7 of []) {
function test9() {
w++;
;
w = (function (u) {
return u;
})(Math.sqrt(false, /x/i)) + JSON.stringify((w ? p7 : true));
if (new.target) {
print('ctor');
}
return String((String(0x10)) || (String.raw`a${true}b`));
}
print(test9());
}
eval("[1, 2].length");
