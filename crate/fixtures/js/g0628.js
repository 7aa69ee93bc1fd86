try {
for (const k0 in { a: 1, b: 2 }) {
;
}
throw new TypeError('');
} catch (err) {
print(err.message);
}
const m = ({ prop0: Object.keys([1, 2]) }) ?? ((String.raw`a${null}b`) || ((100 ? true : 1e3)));
m;
print(/x/i);
{
;
}
