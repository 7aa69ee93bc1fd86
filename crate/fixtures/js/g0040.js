print([/[0-9]+/g, ([...[/ab+c/, /x/i]]) ?? (('', Infinity)), ~(~(/[0-9]+/g))]);
;
try {
var obj = u => {
return u;
};
} catch (e9) {
print(e9.message);
} finally {
var w = 0;
do {
w += 1;
} while (w < 1);
}
;
