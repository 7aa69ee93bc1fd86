print(new Date(10), { next0: Object.keys([1, 2]), value1: { p10: ((p, q = /[0-9]+/g) => p + q)(null), next1: null }, value2: undefined });
print(false);
eval("[1, 2].length");
class Derived7 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived7(true);
}
m0(a) {
return a + this.x;
}
}
print(Derived7.make().value);
if (`t2 ${new WeakMap()} end`) {
var c = { c, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\n']: 1, ...{ q: 2 } };
c = { p10: void (Derived7[10]), next1: ((p, q = 10) => p + q)(new Object(1)) };
} else {
var data = function (...u) {
return u.length;
};
switch ([...[String.raw`a${JSON.stringify(data)}b`, { length0: data }]]) {
case "x":
;
break;
case 'hello':
case /[0-9]+/g:
print(Derived7.x, String.raw`a${[`t0 ${'abc'} end`, [...[Derived7, '\u0041']]]}b`);
default:
eval("var ev = 3; ev * 2");
}
}
Derived7--;
