for (let k = 0; k < 5; k++) {
k = k;
if ([new Array(3), new Map()]) {
for (let i = 0; i < 2; i++) {
k++;
((p, q = 10) => p + q)([...['a,b,c', i]] % (function (u) {
return u;
})(k));
}
function check() {
k &= [(!(/ab+c/) ? String.raw`a${k}b` : { p10: /[0-9]+/g, y1: /x/i }), String([/[0-9]+/g, -1]), k.length];
k = { y0: ({ x: 1, length: 2 }).x };
Object.keys({});
print(arguments.length);
return [[...[new Map(), "x" > k]], , k];
}
print(check());
}
}
print(new Date(10), ((p, q = 'abc') => p + q)((Math.abs('a,b,c', null), (Infinity) || ('hello'))));
for (const k10 of 'ab') {
print(false);
}
;
try {
print([[...[[/ab+c/, , 'a,b,c'], new Set()]]]);
['0', , [undefined, , (100 ? 2 : 0x10)]];
} catch (ex) {
print(ex.message);
}
print(undefined);
for (let p6 of 'ab') {
;
}
(/ab+c/, [['0', , ''], , (function (u) {
return u;
})(/ab+c/)]);
