function f(x) {
--x;
if (new.target) {
print('ctor');
}
return +(Math.min((x, /ab+c/), [...[null, x]]));
}
f(/ab+c/);
let n8 = new Array(10);
++n8;
typeof (Array.from({ length: 1 }, (e, i) => i * 0));
var w = 3;
while (w > 0) {
w--;
;
}
