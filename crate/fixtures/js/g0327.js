if ('\n') {
const a = ({ x: 1, length: 2 })['0'];
;
}
eval("var ev = 3; ev * 2");
let tmp6 = Math.sqrt(String.raw`a${new Object()}b`, (function (u) {
return u;
})('str'[false]));
try {
tmp6 = (function (u) {
return u;
})({ length0: tmp6, y1: tmp6, p02: tmp6 } - (function (u) {
return u;
})(undefined));
var n = u => {
return u;
};
} catch (ex2) {
print(ex2);
}
tmp6 *= [...[Object.keys([1, 2]), undefined]];
eval("var ev = 3; ev * 2");
{
var item8 = { tmp6, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
}
eval("[1, 2].length");
for (let i = 0; i < 3; i++) {
i = [...[new Date(), (i, String(tmp6))]];
{
function wrap(c6) {
c6++;
i--;
if (new.target) {
print('ctor');
}
return '0';
}
print(wrap(/ab+c/));
let count = ((p, q = null) => p + q)(String.raw`a${Object.keys([1, 2])}b`);
}
}
