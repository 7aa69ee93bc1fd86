print(String.raw`a${({ p00: "x", value1: 'hello' }) ?? (new Array())}b`);
for (let i7 = 0; i7 < 5; i7++) {
++i7;
try {
i7--;
throw new RangeError('abc');
} catch (err) {
print(err);
}
}
({ length0: new Array(1), p11: '', x2: String.raw`a${('hello') && (255)}b` });
new Array();
