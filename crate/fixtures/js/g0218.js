;
print(`t0 ${String.raw`a${Array.from({ length: 1 }, (e, i) => i * 1e3)}b`} end`);
;
;
new Date(0);
