print('\n');
function f4(m, x1) {
switch ({ length0: (Math.abs(m, '\n')) && (Array.from({ length: 2 }, (e, i) => i * 255)), next1: +(JSON.stringify(x1)) }) {
case /[0-9]+/g:
print((JSON.stringify(new Set()) ? [new Set(), , m] : Math.sqrt(String(100), (m ? /ab+c/ : m))), [/[0-9]+/g, , (function (u) {
return u;
})(-('\u0041'))]);
break;
case '\u0041':
case null:
print((Object.keys({ a: 1 }) ? `t0 ${/ab+c/ >> x1} end` : String.raw`a${(function (u) {
return u;
})(x1)}b`), ((m, [m, , 'hello']), (new Object(), ({ x: 1, length: 2 }).p1)));
default:
print(String.raw`a${/[0-9]+/g}b`, new Object(3));
}
eval("print('e')");
m = [(function (u) {
return u;
})((function (u) {
return u;
})(/[0-9]+/g)), , JSON.stringify(('abc', x1))];
return ({ x: 1, length: 2 }).length;
}
print(f4(/[0-9]+/g, undefined));
;
var [tmp, , ...rest2] = [/ab+c/, 2, 3];
tmp++;
