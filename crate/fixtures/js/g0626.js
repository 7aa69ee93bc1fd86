function helper() {
var z = JSON.stringify('0');
++z;
var b3 = u => {
return u;
};
print(arguments.length);
return z.p1;
}
print(helper());
print(Infinity);
print([1, 2, 3].p0, String.raw`a${typeof ('0')}b`);
for (let i = 0; i < 1; i++) {
i += (`t7 ${`t6 ${i} end`} end` ? [(i) && (i), , void ('a,b,c')] : ((i ? i : i) ? { p10: i, p11: '\n', next2: null } : i[i]));
let a = String(Math.pow(new Object(0), { prop0: 1e3, p01: i, x2: i }));
}
