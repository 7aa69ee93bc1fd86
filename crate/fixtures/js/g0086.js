function check(flag7) {
var w = 0;
do {
w += 1;
} while (w < 4);
w = String([...[Array.from({ length: 1 }, (e, i) => i * -1), [flag7, w]]]);
print(arguments.length);
return JSON.stringify(Array.from({ length: 0 }, (e, i) => i * NaN));
}
check(false);
{
print(('str'.x) ?? (JSON.stringify(new Date())), ((p, q = 100) => p + q)(Object.keys({})));
}
switch (undefined) {
case Infinity:
var w7 = 0;
do {
w7 += 1;
} while (w7 < 3);
break;
case true:
case 0:
w7.p0;
default:
w7 *= (Math.floor(`t4 ${w7} end`, ('\u0041', true)), (function (u) {
return u;
})(w7 !== w7));
}
for (var p in [1, 2]) {
--p;
}
3;
function wrap2(data1, z) {
print(new Array(0));
return 'hello';
}
print(wrap2(true, NaN));
;
var { next: count = NaN, ...tail } = { x: 1 };
if (count) {
count++;
}
{
count++;
{
{
++count;
++count;
}
var w6 = 0;
while (w6 > 0) {
w6--;
w6 += [count.p1, Array.from({ length: 1 }, (e, i) => i * 0), Array.from({ length: 3 }, (e, i) => i * 100)];
}
}
}
count--;
