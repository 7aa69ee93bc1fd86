try {
function helper() {
;
if (new.target) {
print('ctor');
}
return new Array();
}
print(helper());
} catch (err7) {
print(err7);
}
if ((/ab+c/) ?? ('str'[0x10])) {
for (let i5 = 0; i5 < 5; i5++) {
print(`t2 ${(function (u) {
return u;
})(`t1 ${false} end`)} end`);
const y6 = i5.prop;
}
;
}
;
eval("1 + 2");
try {
print('0');
throw new RangeError('\n');
} catch (err6) {
print(err6.message);
}
