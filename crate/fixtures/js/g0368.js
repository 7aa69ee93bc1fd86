print('abc');
print('abc');
;
var tmp = function (...u) {
return u.length;
};
++tmp;
function compute9(count0, m) {
for (let k5 in [1, 2]) {
;
}
;
print(arguments.length);
return null;
}
compute9(/ab+c/, "x");
