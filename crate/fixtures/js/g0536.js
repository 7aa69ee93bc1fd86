;
[Math.min(undefined, 'a,b,c' == /[0-9]+/g), , `t1 ${`t4 ${null} end`} end`];
function run() {
var w1 = 2;
while (w1 > 0) {
w1--;
eval("var ev = 3; ev * 2");
}
--w1;
;
if (new.target) {
print('ctor');
}
return new WeakMap();
}
print(run());
{
for (let k of 'ab') {
for (var j3 = 0; j3 < 4; j3++) {
j3++;
k = JSON.stringify(k);
}
}
}
print(/x/i);
