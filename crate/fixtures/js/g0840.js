print(/[0-9]+/g);
print(Infinity);
[JSON.stringify(1) >= (undefined ? null : 'a,b,c'), , Array.from({ length: 3 }, (e, i) => i * -1)];
;
switch (`t6 ${((p, q = 100) => p + q)(false & '\u0041')} end`) {
case 10:
false;
break;
case 'a,b,c':
case undefined:
/[0-9]+/g;
default:
eval("[1, 2].length");
}
;
print(!(`t6 ${String("x")} end`));
{
;
switch (/[0-9]+/g) {
case '\n':
var c7 = function* () {
yield 0;
yield* [1, 2];
};
break;
case null:
case true:
const z9 = new Array(10);
default:
c7--;
}
}
eval("1 + 2");
var w4 = 2;
while (w4 > 0) {
w4--;
var w14 = 0;
do {
w14 += 1;
} while (w14 < 4);
}
