;
print(/ab+c/);
String.raw`a${({ x: 1, length: 2 })['a,b,c']}b`;
function check(count) {
;
Array.from({ length: 2 }, (e, i) => i * 1e3) - [({ x: 1, length: 2 })[count], , [count, , count]];
var item8 = async function () {
return await /x/i;
};
return String.raw`a${String.raw`a${((p, q = null) => p + q)(1e3)}b`}b`;
}
print(check("x"));
let arr0 = [1, 2, 3][2] !== 'str'.next;
try {
arr0 <<= arr0;
for (let i = 0; i < 3; i++) {
;
print(String(i.p0));
}
} catch (ex) {
print(ex.message);
}
arr0--;
