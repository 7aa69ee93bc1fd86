eval("[1, 2].length");
var a0 = "x";
;
;
[`t1 ${a0 > a0} end`, , a0];
for (let k of []) {
print(k.y);
}
--a0;
let m = !(([a0, , /x/i] ? JSON.stringify(a0) : '0'));
for (let j = 0; j < 2; j++) {
try {
j *= /[0-9]+/g;
;
throw new Error('\n');
} catch (err) {
print(err);
} finally {
print(Object.keys({}), (String((j ? null : 'a,b,c')) ? new Date() : 'str'[`t5 ${j} end`]));
}
m = m;
}
a0 = [String.raw`a${true}b`, , String(m['a,b,c'])];
