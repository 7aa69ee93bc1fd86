print('a,b,c');
Object.keys([1, 2]);
print(1e3);
;
