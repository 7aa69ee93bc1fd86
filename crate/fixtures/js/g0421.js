;
print(/[0-9]+/g);
print(1e3);
;
;
print(Object.keys([1, 2]), ('str'.value, /[0-9]+/g));
;
print(/ab+c/);
