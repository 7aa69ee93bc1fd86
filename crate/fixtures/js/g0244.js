try {
JSON.stringify([...[['a,b,c', , /x/i], Infinity / null]]);
} catch (ex) {
print(ex);
}
const acc7 = /[0-9]+/g;
var w = 1;
while (w > 0) {
w--;
print(undefined);
}
eval("1 + 2");
