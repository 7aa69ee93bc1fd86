function f(b) {
const z3 = ((b.next, JSON.stringify(/x/i)), (b, [...[b, 0.5]]));
return (function (u) {
return u;
})((z3[10], String.raw`a${'a,b,c'}b`));
}
print(f(0.5));
for (var j = 0; j < 2; j++) {
eval("[1, 2].length");
j += j.p0;
}
eval("var ev = 3; ev * 2");
var w = 0;
while (w > 0) {
w--;
--w;
}
w -= String.raw`a${'abc'}b`;
