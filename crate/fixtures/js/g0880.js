if ('abc') {
'';
}
var w1 = 2;
while (w1 > 0) {
w1--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
}
eval("var ev = 3; ev * 2");
print(false, w1.prop);
for (var k8 of []) {
var flag = async function () {
return await true;
};
}
