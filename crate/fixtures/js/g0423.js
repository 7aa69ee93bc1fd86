var w = 0;
do {
w += 1;
} while (w < 1);
eval("1 + 2");
--w;
var w2 = 3;
while (w2 > 0) {
w2--;
w2 |= (Object.keys([1, 2]), (String.raw`a${w2}b`, [...[NaN, 'a,b,c']]));
}
var str5 = (u, v = null) => u + v;
for (let i = 0; i < 3; i++) {
function f() {
let key = /ab+c/ ^ ((p, q = 3) => p + q)(String.raw`a${-1}b`);
print((`t5 ${{ value0: i }} end`) || ((function (u) {
return u;
})([255, 1e3])), typeof (new Array()));
w -= [...[(function (u) {
return u;
})('str'.p0), Math.floor([w2, , i], String(/x/i))]];
return new Array(1);
}
print(f());
--w;
}
