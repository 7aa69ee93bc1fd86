print(Infinity);
(function (u) {
return u;
})(Object.keys([1, 2]));
var item = { item, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['0']: 1, ...{ q: 2 } };
for (var i2 = 0; i2 < 4; i2++) {
item &= String(item);
(function (u) {
return u;
})([JSON.stringify(Infinity), , i2]);
}
item.p1;
switch (Array.from({ length: 3 }, (e, i) => i * 0x10)) {
case 'a,b,c':
print(({ x: 1, length: 2 })[{ value0: (false, ''), p01: [100, , item], length2: -1 }]);
break;
case /x/i:
case Infinity:
item = { next0: JSON.stringify(Math.max(/ab+c/, item)), p11: { y0: '', value1: [item, , item], value2: item.next } };
default:
print((Object.keys({ a: 1 })) || (String.raw`a${((p, q = '') => p + q)(/ab+c/)}b`), String(String.raw`a${{ length0: item }}b`));
}
print(JSON.stringify(String([item, , item])), item);
;
if ([...[{ value0: String(item), prop1: Infinity, value2: /x/i }, ((function (u) {
return u;
})(true)) ?? ([...[item, item]])]]) {
print(String.raw`a${(function (u) {
return u;
})('hello') % item[item]}b`, (`t6 ${-(item)} end`, Array.from({ length: 1 }, (e, i) => i * Infinity)));
eval("[1, 2].length");
item = (item, String.raw`a${item[item]}b`);
}
