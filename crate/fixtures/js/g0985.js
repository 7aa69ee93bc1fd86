if (/x/i) {
function run3(key1, x) {
x += key1.prop;
print(new Date(), ((p, q = /x/i) => p + q)([...[(1e3, key1), 'a,b,c']]));
;
print(arguments.length);
return new Map();
}
print(run3(0.5, true));
} else {
{
print(1);
for (let i7 = 0; i7 < 2; i7++) {
(new Error(0)) ?? (JSON.stringify(/[0-9]+/g));
i7--;
}
}
print(1e3);
}
print(String(Math.round(new WeakMap(), Object.keys([1, 2]))), ([new WeakMap(), , 0]) || ({ x0: [], p01: ((p, q = '\n') => p + q)('hello'), y2: String(undefined) }));
eval("1 + 2");
try {
Object.keys([1, 2]);
print(((p, q = '0') => p + q)(-1));
} catch (e) {
print(e.message);
}
