const z = JSON.stringify(`t4 ${255} end`);
;
if (String(new Date(0))) {
print(/x/i);
}
eval("print('e')");
