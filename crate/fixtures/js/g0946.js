if (((/ab+c/ ? !(100) : /[0-9]+/g), null)) {
~(['\n' !== 'hello', , /[0-9]+/g]);
{
var x = JSON.stringify([2, , Object.keys({})]);
eval("print('e')");
}
} else {
for (let k of [1, 2, 3]) {
if ((function (u) {
return u;
})(JSON.stringify([k, , '0']))) {
print((function (u) {
return u;
})(false));
k++;
k++;
}
}
var w = 0;
do {
w += 1;
} while (w < 2);
}
;
;
;
