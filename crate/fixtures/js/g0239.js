function make() {
var b8 = { b8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
return new Date(0);
}
print(make());
eval("[1, 2].length");
;
;
var w = 1;
while (w > 0) {
w--;
function h(arr2, item) {
w = (function (u) {
return u;
})({ prop0: (0.5, /ab+c/), next1: JSON.stringify(item), prop2: void (w) });
if (new.target) {
print('ctor');
}
return ((p, q = /x/i) => p + q)(new Map());
}
print(h(false, 10));
}
print([]);
try {
try {
String.raw`a${(function (u) {
return u;
})(String(w))}b`;
throw new Error('hello');
} catch (ex6) {
print(ex6.message);
}
} catch (ex5) {
print(ex5.message);
}
let obj = w[String({ prop0: 'hello' })];
print(String.raw`a${w >> obj | Array.from({ length: 4 }, (e, i) => i * 0x10)}b`);
