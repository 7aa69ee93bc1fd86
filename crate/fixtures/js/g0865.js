;
;
var w = 3;
while (w > 0) {
w--;
for (let k in { a: 1, b: 2 }) {
eval("1 + 2");
}
}
w *= /x/i;
var flag = { flag, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
print({ y0: [String.raw`a${w}b`, , new Map()], p11: 'a,b,c' }, JSON.stringify(new Array()));
