;
var [flag1, , ...tail6] = [/ab+c/, 2, 3];
var { prop: flag8 = '0', ...tail0 } = { x: 1 };
++flag1;
flag1 = String(((/x/i, flag8)) && (flag1));
eval("var ev = 3; ev * 2");
var w = 0;
while (w > 0) {
w--;
var w18 = 0;
do {
w18 += 1;
} while (w18 < 3);
}
var { y: res = 100, ...tail2 } = { x: 1 };
print(Object.keys({}));
switch ((String.raw`a${[...['abc', w]]}b` ? !(flag1) : flag8)) {
case undefined:
[...[[...[(res) || (flag1), [...[flag1, 0]]]], res]];
break;
case '0':
case /x/i:
eval("1 + 2");
default:
Math.min(~([...['\u0041', null]]), [new Set(), , (function (u) {
return u;
})(res)]);
}
