print(undefined);
;
;
print(false);
print(null);
/x/i;
print(null);
