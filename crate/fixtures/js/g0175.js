print(Object.keys({}));
;
;
const flag6 = 'str'[(({ x: 1, length: 2 })['hello']) || ('hello')];
