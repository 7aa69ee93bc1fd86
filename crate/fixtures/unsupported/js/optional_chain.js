var o = { a: { b: 1 } };
print(o?.a?.b);
