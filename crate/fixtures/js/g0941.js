for (let i8 = 0; i8 < 5; i8++) {
i8 -= (Object.keys([1, 2]), [JSON.stringify(/[0-9]+/g), , [...[Infinity, 1e3]]]);
i8 += 0;
}
;
print(/[0-9]+/g);
var [count, , ...rest3] = [/[0-9]+/g, 2, 3];
