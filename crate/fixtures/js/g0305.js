for (let k6 of 'ab') {
--k6;
}
var { p1: data0 = 2, ...tail1 } = { x: 1 };
var item3 = function* () {
yield 'a,b,c';
yield* [1, 2];
};
print(data0, (function (u) {
return u;
})((new Object(10), ['', , data0])));
switch ('') {
case null:
{
--data0;
print(item3);
}
break;
case undefined:
case '\n':
let flag = [...[(function (u) {
return u;
})(item3), String((function (u) {
return u;
})(0))]];
default:
item3 -= [(function (u) {
return u;
})({ p00: '\n', value1: data0 }), , (JSON.stringify(item3) ? Object.keys({}) : new Set())];
}
function wrap(n5) {
var w = 3;
while (w > 0) {
w--;
n5 &= (new Error() ? item3 : [item3 >> item3]);
}
++item3;
print(arguments.length);
return n5[String.raw`a${{ y0: data0 }}b`];
}
print(wrap(/ab+c/));
;
var w0 = 0;
do {
w0 += 1;
} while (w0 < 2);
switch ((function (u) {
return u;
})(String((w0) ?? (data0)))) {
case /ab+c/:
var w20 = 0;
do {
w20 += 1;
} while (w20 < 2);
break;
case /x/i:
case /x/i:
w20++;
default:
item3 = [data0, , new WeakMap()];
}
