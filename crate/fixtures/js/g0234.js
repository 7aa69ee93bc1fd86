print(10);
const n8 = ((p, q = NaN) => p + q)([{ length0: "x", p01: /[0-9]+/g, x2: false }]);
;
print((JSON.stringify(n8) ? Object.keys({ a: 1 }) : n8), typeof ([...[(false) || ('abc'), new Object(1)]]));
eval("1 + 2");
;
print('');
