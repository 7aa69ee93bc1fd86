print(undefined);
print('hello');
JSON.stringify(Object.keys({}));
try {
print(/x/i);
} catch (err) {
print(err);
}
