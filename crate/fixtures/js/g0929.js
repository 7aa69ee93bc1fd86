(/[0-9]+/g) || (String([/[0-9]+/g, , '0']));
for (const p in [1, 2]) {
let n6 = ([...[String.raw`a${p}b`, []]]) || ([p, , Array.from({ length: 4 }, (e, i) => i * Infinity)]);
}
print(new Set());
;
{
let z = Array.from({ length: 3 }, (e, i) => i * 100);
Object.keys({ a: 1 });
}
