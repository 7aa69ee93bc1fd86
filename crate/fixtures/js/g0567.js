print((((0x10 ? '\u0041' : '\n'), '') ? new Map() : ((p, q = undefined) => p + q)(String('hello'))));
print(undefined);
;
;
print("x");
{
const c = /[0-9]+/g;
}
print(0x10);
print(100);
print(JSON.stringify(('\u0041', /[0-9]+/g)), []);
var w = 0;
while (w > 0) {
w--;
;
}
print(new Object(1), Object.keys({ a: 1 }));
