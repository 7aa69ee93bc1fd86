;
eval("[1, 2].length");
;
{
switch (`t8 ${~([1e3, , undefined])} end`) {
case 0.5:
print([...[String.raw`a${'hello'}b`, new Date()]]);
break;
case /x/i:
case '':
eval("var ev = 3; ev * 2");
default:
;
}
}
var res = ((p, q = /ab+c/) => p + q)({ length0: 0.5, next1: null });
res = res[({ x: 1, length: 2 })[(res, res)]];
res++;
res *= [...[new Array(), (String.raw`a${res}b`) || (String.raw`a${null}b`)]];
++res;
++res;
