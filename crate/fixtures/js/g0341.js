var str = +(undefined);
eval("[1, 2].length");
print(JSON.stringify(1));
;
