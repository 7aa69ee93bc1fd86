if (new Set()) {
;
function run6(b3, x) {
x++;
if (new.target) {
print('ctor');
}
return [...[x, Math.round(new Array(3), ('a,b,c') && (b3))]];
}
run6(undefined, null);
} else {
var count = function (...u) {
return u.length;
};
var str4 = ((Math.sqrt(count, count), new WeakMap())) || (String(!('\n')));
}
var w4 = 0;
do {
w4 += 1;
} while (w4 < 1);
var w9 = 0;
do {
w9 += 1;
} while (w9 < 4);
var w = 0;
do {
w += 1;
} while (w < 3);
--w4;
eval("print('e')");
var w11 = 2;
while (w11 > 0) {
w11--;
w4 = w9[{ p00: void (w9) }];
}
w11 = ([w11, , (function (u) {
return u;
})('hello')], (w4.value ? (w11) && (0.5) : `t3 ${w9} end`));
class Derived {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived(NaN);
}
m1(a) {
return a + this.x;
}
}
print(Derived.make().value);
