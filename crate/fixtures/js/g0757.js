print(`t4 ${((/x/i) ?? ('0')) ?? (String.raw`a${"x"}b`)} end`, (function (u) {
return u;
})((new Error(0)) || (false / /ab+c/)));
eval("print('e')");
for (var k = 0; k < 2; k++) {
k &= (function (u) {
return u;
})([...[Math.sqrt(k, k), '0']]);
print(k[[~(k), JSON.stringify(/x/i), Object.keys({})]]);
}
for (const p3 of 'ab') {
;
}
print("x");
var m2 = u => {
return u;
};
