print(([...[[null, null], ((p, q = 100) => p + q)(0x10)]]) ?? (JSON.stringify(/[0-9]+/g) == JSON.stringify('0')));
print(0);
const item6 = String(/[0-9]+/g);
;
for (const p of 'ab') {
;
}
;
const tmp = JSON.stringify(String(({ x: 1, length: 2 }).x));
