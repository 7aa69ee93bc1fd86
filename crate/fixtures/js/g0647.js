print(/ab+c/);
;
const res7 = { value0: (function (u) {
return u;
})({ p00: Infinity, prop1: -1 }), length1: String.raw`a${Object.keys({})}b` };
Math.floor(Array.from({ length: 1 }, (e, i) => i * 2), new Object(10));
