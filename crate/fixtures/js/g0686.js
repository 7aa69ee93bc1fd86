try {
for (let i = 0; i < 5; i++) {
for (var k6 = 0; k6 < 1; k6++) {
i++;
;
}
i++;
}
print(((p, q = 2) => p + q)(null), /[0-9]+/g <= 'a,b,c');
} catch (ex0) {
print(ex0);
}
((p, q = true) => p + q)([/ab+c/, ('abc') ?? (10)]);
;
eval("1 + 2");
var item = async function () {
return await NaN;
};
;
