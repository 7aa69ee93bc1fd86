;
print('');
;
print(new Date());
print(undefined);
print(/x/i);
;
print({ value0: new Error(3) });
