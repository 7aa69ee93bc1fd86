eval("print('e')");
;
print(null);
print(true);
for (let k = 0; k < 2; k++) {
print(k[JSON.stringify({ p10: k, x1: 'abc', y2: 255 })], 'hello');
k++;
}
print(((Math.abs(2, /x/i)) || (String.raw`a${NaN}b`) ? [...[Object.keys({ a: 1 }), null]] : '\u0041'));
