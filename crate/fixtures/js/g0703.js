try {
switch (`t0 ${Object.keys({})} end`) {
case 100:
switch (typeof (new Set())) {
case /[0-9]+/g:
print(100);
break;
case /x/i:
case '':
eval("[1, 2].length");
default:
1e3;
}
break;
case false:
case 0:
print(true);
default:
print(/x/i);
}
throw new Error('\n');
} catch (err7) {
print(err7);
}
print("x", new Object(10));
for (let k1 = 0; k1 < 2; k1++) {
k1 = (String(Object.keys([1, 2])) ? Math.abs(undefined, k1[k1]) : String('hello'));
k1 <<= (k1) && (`t0 ${JSON.stringify(0.5)} end`);
}
;
var w = 1;
while (w > 0) {
w--;
print(0x10, Math.round(Object.keys({}), (((p, q = 100) => p + q)('\n')) && ([])));
}
for (let i = 0; i < 3; i++) {
try {
function wrap(data1, tmp3) {
print([], [[...[((p, q = /ab+c/) => p + q)(tmp3), String(1)]], , data1.p1]);
print(255, +(Math.max([w, , /x/i], String(w))));
if (new.target) {
print('ctor');
}
print(arguments.length);
return (Object.keys({})) && (Math.pow(new WeakMap(), data1.p0));
}
print(wrap(1, 0));
i++;
throw new RangeError('');
} catch (e) {
print(e);
}
w = Object.keys([1, 2]);
}
