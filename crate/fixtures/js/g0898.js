const c9 = ([...[`t3 ${'\n'} end`, String(/ab+c/)]], new Object(3));
if ({ prop0: JSON.stringify('0'), p11: `t1 ${String.raw`a${/[0-9]+/g}b`} end` }) {
~((new Array(), [c9, c9]));
{
;
;
}
}
var w8 = 1;
while (w8 > 0) {
w8--;
--w8;
}
w8 = Array.from({ length: 0 }, (e, i) => i * 0);
var data = function (...u) {
return u.length;
};
var w = 0;
do {
w += 1;
} while (w < 3);
