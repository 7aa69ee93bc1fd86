print(true);
;
print({ prop0: ([...[/[0-9]+/g, /ab+c/]] ? `t6 ${'a,b,c'} end` : 'str'.p0), y1: Array.from({ length: 0 }, (e, i) => i * 100), x2: `t4 ${(255, /[0-9]+/g)} end` }, (undefined ? ({ x: 1, length: 2 })['str'["x"]] : Object.keys({})));
function h(n8) {
function test3(n4, key3) {
;
print([...[/x/i, ((/ab+c/, n4)) ?? ((function (u) {
return u;
})(key3))]]);
return new Object(1);
}
test3('a,b,c', false);
n8 = String.raw`a${new Error(10)}b`;
var w = 2;
while (w > 0) {
w--;
;
}
if (new.target) {
print('ctor');
}
return Object.keys({ a: 1 });
}
h(/ab+c/);
let z3 = `t4 ${Math.max(/ab+c/, 0) / String(0)} end`;
