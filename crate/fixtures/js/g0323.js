function h2(x4) {
debugger;
try {
x4 += new Map();
let arr2 = [String((x4, 100)), , Array.from({ length: 1 }, (e, i) => i * 1)];
} catch (ex) {
print(ex.message);
}
x4 = (Math.abs({ p10: undefined, prop1: x4, value2: /x/i }, 'hello'), (function (u) {
return u;
})(('0') ?? ("x")));
return Math.pow(x4.p1, `t1 ${[/[0-9]+/g, , x4]} end`);
}
h2('0');
{
if ([{ y0: [1, 2, 3].p0 }]) {
;
}
}
print('0');
class Box7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Box7('');
}
m0(a) {
return a + this.x;
}
}
print(Box7.make().value);
print(+([Object.keys({ a: 1 }), , Box7.p1]), Math.sqrt(Math.abs([2, , null], ['a,b,c', , true]), h2()));
try {
var w = 0;
do {
w += 1;
} while (w < 1);
} catch (ex6) {
print(ex6);
}
var key7 = function (...u) {
return u.length;
};
switch ((function (u) {
return u;
})(Object.keys({ a: 1 }))) {
case 2:
--Box7;
break;
case -1:
case /x/i:
key7 <<= (((p, q = '0') => p + q)(JSON.stringify(key7))) && (String(/ab+c/));
default:
eval("var ev = 3; ev * 2");
}
