function helper() {
try {
print('a,b,c');
print([/x/i, , 0], new Map());
throw new Error('0');
} catch (err7) {
print(err7.message);
} finally {
print(new Array());
}
return { x0: ([undefined, , 'abc'], String('hello')), x1: Array.from({ length: 3 }, (e, i) => i * 3) };
}
print(helper());
String(JSON.stringify(new Date()));
print('abc');
;
print(Object.keys({}));
