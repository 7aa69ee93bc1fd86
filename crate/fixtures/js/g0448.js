;
print(false);
print({ p10: Object.keys({ a: 1 }) }, ({ x: 1, length: 2 }).value);
;
function make5(data) {
data = null;
var str5 = u => {
return u;
};
;
return data;
}
print(make5(undefined));
for (const k8 in [1, 2]) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break;
}
}
}
var w = 0;
do {
w += 1;
} while (w < 3);
try {
--w;
var b3 = function (...u) {
return u.length;
};
} catch (e2) {
print(e2.message);
}
for (var p1 of 'ab') {
{
w = [w[w], , `t0 ${(100, p1)} end`];
}
}
