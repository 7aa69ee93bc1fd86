let val = Object.keys([1, 2]);
val |= new Date(0);
Object.keys({});
var w = 3;
while (w > 0) {
w--;
let data4 = [val.y, , Array.from({ length: 4 }, (e, i) => i * -1)];
}
