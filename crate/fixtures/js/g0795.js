{
print((function (u) {
return u;
})([Math.sqrt('0', 'hello'), , 'str'.length]), (null) ?? ((Math.min(false, false), Array.from({ length: 3 }, (e, i) => i * 1e3))));
try {
for (let p in [1, 2]) {
let a6 = null;
}
if ('abc') {
;
print(2);
;
} else {
print('a,b,c');
}
throw new RangeError('a,b,c');
} catch (err8) {
print(err8.message);
}
}
;
;
let str = new Map();
function compute(key1, arr0) {
try {
print(Math.sqrt(String.raw`a${(/[0-9]+/g ? str : null)}b`, Object.keys({ a: 1 })));
throw new Error('');
} catch (err3) {
print(err3.message);
}
if (new.target) {
print('ctor');
}
return new Set();
}
print(compute(undefined, ''));
