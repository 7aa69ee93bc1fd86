print(Math.pow(`t0 ${new Set()} end`, Array.from({ length: 2 }, (e, i) => i * 1)), null);
print(false);
function f() {
var w = 2;
while (w > 0) {
w--;
new Error();
}
var w19 = 2;
while (w19 > 0) {
w19--;
print((w19.value ? Array.from({ length: 4 }, (e, i) => i * 0x10) : ((p, q = 0.5) => p + q)(('a,b,c', true))), new Map());
}
let data9 = (Object.keys([1, 2]), JSON.stringify([...[w19, '0']]));
return data9 | ((p, q = true) => p + q)(((p, q = '\n') => p + q)(w));
}
print(f());
var c = null;
