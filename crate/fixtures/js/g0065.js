try {
const x1 = Object.keys({ a: 1 });
eval("[1, 2].length");
} catch (ex1) {
print(ex1.message);
}
;
print(new Set(), 'str'[{ next0: [] }]);
;
;
