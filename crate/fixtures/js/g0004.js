;
const res = Array.from({ length: 2 }, (e, i) => i * 2);
let y = /ab+c/;
print({ value0: `t7 ${JSON.stringify(/x/i)} end`, x1: Array.from({ length: 0 }, (e, i) => i * 0.5), y2: (y ? y : /x/i) != res }, String.raw`a${[[undefined, y], Array.from({ length: 0 }, (e, i) => i * NaN)]}b`);
y = [...[new Date(1), [...[y >> /ab+c/, String(true)]]]];
