;
print((new Date(3)) && ((undefined) || (/x/i - false)));
print(/x/i);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 2) continue;
}
}
({ p00: [...[{ p10: '0', next1: false, next2: 1 }, `t8 ${false} end`]], y1: new Error(), y2: (String(0x10)) || (~(undefined)) });
Math.abs(JSON.stringify(Object.keys({ a: 1 })), +(Array.from({ length: 1 }, (e, i) => i * 1e3)));
for (const p in { a: 1, b: 2 }) {
for (var j7 = 0; j7 < 2; j7++) {
try {
;
throw new TypeError('a,b,c');
} catch (err4) {
print(err4.message);
}
let n0 = [String.raw`a${(true, j7)}b`, [p - 1e3, , void (/x/i)], String.raw`a${[...[0, j7]]}b`];
}
}
;
const res9 = new Error();
