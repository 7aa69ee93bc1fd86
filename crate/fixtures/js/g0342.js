var count7 = { count7, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
var w = 3;
while (w > 0) {
w--;
;
}
--w;
count7--;
for (var p of [1, 2, 3]) {
((Array.from({ length: 4 }, (e, i) => i * -1), new Error()), (function (u) {
return u;
})(JSON.stringify(true)));
}
eval("1 + 2");
count7 = JSON.stringify([(function (u) {
return u;
})(w)]);
var count6 = '';
