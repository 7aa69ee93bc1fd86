const val3 = [[1, 2, 3].value, [...['\u0041', null]]];
String.raw`a${JSON.stringify(String(val3))}b`;
print(Object.keys([1, 2]));
let item = Infinity;
