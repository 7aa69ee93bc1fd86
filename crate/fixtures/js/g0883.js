print(Array.from({ length: 1 }, (e, i) => i * NaN));
try {
if (`t4 ${new Map()} end`) {
class Derived5 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Derived5(/ab+c/);
}
m1(a) {
return a + this.x;
}
}
class Base extends Derived5 {
constructor() {
super(/x/i);
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new Base().value);
}
throw new RangeError('hello');
} catch (ex7) {
print(ex7.message);
}
var w = 0;
do {
w += 1;
} while (w < 4);
--w;
w--;
w++;
if ({ p00: `t6 ${0x10} end` } | w == new Date(1)) {
w = Object.keys({});
w--;
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
} else {
new Object(1);
var res = function* () {
yield undefined;
yield* [1, 2];
};
}
w = Array.from({ length: 2 }, (e, i) => i * 1) >>> JSON.stringify(w);
;
