print(/ab+c/);
for (var k of []) {
class C {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
class C4 extends C {
constructor() {
super(3);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new C4().value);
}
const c = (Object.keys({ a: 1 }), (/x/i ? 255 : ('a,b,c') ?? (true)));
eval("1 + 2");
var res = { res, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
function compute(n) {
;
++n;
if (new.target) {
print('ctor');
}
print(arguments.length);
return (new Object() ? c[res] : JSON.stringify(Math.round(/x/i, NaN)));
}
print(compute('0'));
eval("var ev = 3; ev * 2");
print((function (u) {
return u;
})(((function (u) {
return u;
})(c) ? ('0') || (c) : [255])), 'str'[{ prop0: JSON.stringify(res), p11: Object.keys({ a: 1 }), p12: [...[res, c]] }]);
var w9 = 0;
do {
w9 += 1;
} while (w9 < 4);
eval("print('e')");
Math.pow(!(NaN), ['']) == [!(c), , { value0: c, next1: /x/i, y2: res }];
