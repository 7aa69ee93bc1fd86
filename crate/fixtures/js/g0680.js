{
print([1, 2, 3][1e3], String({ p10: [...["x", undefined]] }));
}
;
('') ?? (Array.from({ length: 1 }, (e, i) => i * 0));
print(Array.from({ length: 2 }, (e, i) => i * 2));
;
;
