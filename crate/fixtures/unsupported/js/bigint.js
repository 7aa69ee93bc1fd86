var big = 10n;
print(big);
