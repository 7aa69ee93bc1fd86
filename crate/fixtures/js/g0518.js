print('');
print(/ab+c/);
({ prop0: [new Set(), , Math.pow(/x/i, null)], y1: (Array.from({ length: 1 }, (e, i) => i * Infinity), [1, 2, 3][true]), length2: -('a,b,c' === /[0-9]+/g) });
print(/ab+c/);
