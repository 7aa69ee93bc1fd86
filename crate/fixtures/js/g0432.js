;
var w = 2;
while (w > 0) {
w--;
;
}
++w;
--w;
const z1 = void ((function (u) {
return u;
})(String('\n')));
