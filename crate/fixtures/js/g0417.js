switch ([`t3 ${((p, q = /x/i) => p + q)('abc')} end`]) {
case /[0-9]+/g:
var b = /x/i;
break;
case /[0-9]+/g:
case 0.5:
print({ prop0: b['hello'] / '\n', y1: Object.keys([1, 2]) });
default:
const acc0 = 0.5;
}
var val6 = [[...[({ x: 1, length: 2 }).next, 0x10]], , [+('a,b,c'), (/[0-9]+/g ? undefined : 100)]];
print(Math.sqrt((function (u) {
return u;
})(Object.keys({})), Math.round([val6, , val6], Object.keys({}))));
val6--;
var c5 = (u, v = false) => u + v;
++c5;
{
c5 += (`t7 ${(c5, c5)} end`) || (({ prop0: val6, p11: 10 }) ?? (({ x: 1, length: 2 })['\n']));
}
print((Math.abs({ y0: c5, p11: val6, length2: val6 }, String.raw`a${val6}b`) ? (function (u) {
return u;
})(val6) : val6.p1), new Error(3));
