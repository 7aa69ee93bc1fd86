[...[10, ('str'.length ? 'a,b,c' : `t3 ${0} end`)]];
if (undefined) {
switch ({ prop0: { length0: ('\n') && (2), prop1: Object.keys([1, 2]), length2: (false, /x/i) } }) {
case Infinity:
({ length0: String([]), x1: 'str'.y });
break;
case 100:
case /x/i:
var val = new Array();
default:
;
}
} else {
var w3 = 3;
while (w3 > 0) {
w3--;
{
;
}
}
{
try {
eval("var ev = 3; ev * 2");
w3 = Array.from({ length: 0 }, (e, i) => i * 255);
} catch (err2) {
print(err2);
} finally {
print(0x10);
}
}
}
;
var res1 = { res1, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
{
print((function (u) {
return u;
})((res1 ? res1 : res1)) !== '');
}
function compute9(flag) {
switch (new Array(10) & ([res1, , res1]) && ((/[0-9]+/g ? res1 : /x/i))) {
case 'abc':
flag = new Array(1);
break;
case 'hello':
case true:
print(!([res1]), String(/x/i));
default:
res1++;
}
;
flag++;
print(arguments.length);
return -((function (u) {
return u;
})('hello') >>> ~(/ab+c/));
}
print(compute9(/[0-9]+/g));
debugger;
