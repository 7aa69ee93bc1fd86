var w = 1;
while (w > 0) {
w--;
function compute(z) {
eval("1 + 2");
print(arguments.length);
return (function (u) {
return u;
})((function (u) {
return u;
})({ p00: 'hello', prop1: z, y2: false }));
}
print(compute('a,b,c'));
}
w = new Set() & `t6 ${[1, 2, 3][w]} end`;
{
eval("[1, 2].length");
}
for (var p3 of []) {
eval("[1, 2].length");
}
