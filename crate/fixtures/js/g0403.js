{
var acc = u => {
return u;
};
}
eval("1 + 2");
;
print(0x10);
;
print('0', `t6 ${'hello'} end`);
