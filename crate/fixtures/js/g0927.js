var [n, , ...rest] = ['', 2, 3];
new WeakMap();
;
n = Object.keys([1, 2]);
