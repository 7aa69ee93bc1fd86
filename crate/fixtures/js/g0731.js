var w = 0;
do {
w += 1;
} while (w < 1);
eval("[1, 2].length");
Object.keys([1, 2]);
switch (w[[...[JSON.stringify(100), Math.floor(w, true)]]]) {
case true:
var w6 = 0;
while (w6 > 0) {
w6--;
--w;
}
break;
case '\u0041':
case true:
var b7 = { prop0: w, value1: (Object.keys([1, 2])) || ([...[w, 'hello']]), value2: ([]) && (w) };
default:
--w;
}
((p, q = "x") => p + q)(Object.keys({}));
let y = `t4 ${{ p10: w }} end` < Object.keys([1, 2]);
print(new Date(0), /[0-9]+/g);
new Date();
const a = (function (u) {
return u;
})((y ? y : /[0-9]+/g)) !== (w ? JSON.stringify(w) : 3);
