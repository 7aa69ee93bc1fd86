let data = 255;
for (let k9 = 0; k9 < 2; k9++) {
data &= (Object.keys([1, 2]) ? (`t3 ${null} end`) || (((p, q = 'a,b,c') => p + q)(undefined)) : 'hello');
if ([Array.from({ length: 4 }, (e, i) => i * 100), , ([false, k9]) && (new WeakMap())]) {
eval("var ev = 3; ev * 2");
switch (String.raw`a${('\u0041', data)}b` + Array.from({ length: 2 }, (e, i) => i * 0x10)) {
case undefined:
k9++;
break;
case 2:
case Infinity:
print(/ab+c/, String.raw`a${[data, [k9, , data], ((p, q = /x/i) => p + q)(data)]}b`);
default:
print(Array.from({ length: 4 }, (e, i) => i * Infinity));
}
function make4(flag, c8) {
eval("print('e')");
--flag;
print(new Array());
return String(String(null)) != Array.from({ length: 0 }, (e, i) => i * Infinity);
}
make4(/x/i, 3);
} else {
data--;
k9 &= ((String(data)) && (k9.p0), { x0: Infinity, p11: 'str'[undefined], value2: data == k9 });
}
}
switch ([data, , JSON.stringify([1e3, data, data])]) {
case /x/i:
(new Error(1), data);
break;
case /x/i:
case undefined:
data = String(data.p1);
default:
data |= data;
}
for (let j4 = 0; j4 < 5; j4++) {
{
++j4;
j4--;
}
var w3 = 2;
while (w3 > 0) {
w3--;
print(((p, q = 'a,b,c') => p + q)((function (u) {
return u;
})(new Map())), Array.from({ length: 2 }, (e, i) => i * 1));
}
}
;
;
for (var i0 = 0; i0 < 1; i0++) {
for (var j = 0; j < 3; j++) {
print(`t8 ${new Object(1)} end`, -1);
print(Math.round([j, , String.raw`a${data}b`], 10));
}
switch (new Array(0)) {
case '\n':
print((Object.keys({ a: 1 })) || (~(Object.keys([1, 2]))));
break;
case /x/i:
case undefined:
i0 = new Set();
default:
print(String(i0));
}
}
print(([...[new Date(), typeof (/x/i)]], [...[(data, data), `t5 ${data} end`]]), String.raw`a${Object.keys({ a: 1 })}b`);
