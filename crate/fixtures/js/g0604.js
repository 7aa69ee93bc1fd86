eval("[1, 2].length");
print(0x10);
print('abc');
var obj8 = function* () {
yield /ab+c/;
yield* [1, 2];
};
print([Object.keys({}) != new Error(), [], (Object.keys([1, 2])) && (((p, q = null) => p + q)('a,b,c'))], (new Error() ? obj8 : ["x", (obj8, 1e3), obj8]));
eval("print('e')");
var w8 = 0;
do {
w8 += 1;
} while (w8 < 1);
