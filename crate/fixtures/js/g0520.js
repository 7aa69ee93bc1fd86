print('\u0041');
eval("1 + 2");
var w1 = 0;
do {
w1 += 1;
} while (w1 < 1);
var count = function* () {
yield undefined;
yield* [1, 2];
};
;
try {
function check7(obj) {
--obj;
--count;
++w1;
return (w1 ? `t8 ${String.raw`a${/x/i}b`} end` : ((/[0-9]+/g, '\u0041')) || (obj[obj]));
}
check7(0x10);
function test8(a, b3) {
a--;
a--;
return Array.from({ length: 2 }, (e, i) => i * 0x10);
}
print(test8(/ab+c/, '\u0041'));
} catch (err5) {
print(err5.message);
} finally {
function helper(c8, str) {
++count;
print(arguments.length);
return (str[String(false)], Object.keys({}));
}
print(helper(/x/i, /x/i));
}
{
for (var i = 0; i < 3; i++) {
print(Math.max(((p, q = '0') => p + q)(typeof (i)), [new Date(), , JSON.stringify(/[0-9]+/g)]));
count = Math.sqrt(String('\n'), new Array(1));
}
}
;
if ((String.raw`a${('\n', w1)}b`) && (((1e3) && (count), new Date()))) {
;
w1 = false;
} else {
let arr = String.raw`a${(3 ? JSON.stringify(w1) : Math.pow(false, w1))}b`;
--count;
}
{
print((('\n', count), new Map()) != count, count[Array.from({ length: 4 }, (e, i) => i * 0)]);
var z = { z, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
}
--w1;
