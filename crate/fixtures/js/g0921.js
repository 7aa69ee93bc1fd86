print('\u0041');
print(null);
(1, { y0: ['\u0041', , 3], length1: ('abc' ? /ab+c/ : /[0-9]+/g), p02: `t8 ${'\u0041'} end` });
if ((Array.from({ length: 0 }, (e, i) => i * 100)) ?? ([(-1) && (/[0-9]+/g), , /x/i & '\u0041'])) {
var w = 0;
do {
w += 1;
} while (w < 3);
} else {
print(true);
}
let count = (new Set() ? Object.keys({}) : NaN);
count--;
;
var acc8 = u => {
return u;
};
{
count++;
}
