print([], JSON.stringify((~(/ab+c/)) ?? ('')));
function wrap8(obj) {
print(obj, Array.from({ length: 0 }, (e, i) => i * 0.5));
var w = 0;
do {
w += 1;
} while (w < 2);
return /ab+c/;
}
print(wrap8('\n'));
print([...[`t7 ${wrap8(-1)} end`, [(1e3, '\u0041'), , [...[/ab+c/, /x/i]]]]], String.raw`a${Math.min([...['a,b,c', /ab+c/]], /ab+c/)}b`);
;
function h(arr2) {
arr2--;
print(arguments.length);
return typeof ([`t4 ${arr2} end`, , new WeakMap()]);
}
print(h("x"));
print({ prop0: JSON.stringify(wrap8(0.5)), y1: ({ x: 1, length: 2 })[JSON.stringify(/[0-9]+/g)] });
var w17 = 3;
while (w17 > 0) {
w17--;
Array.from({ length: 2 }, (e, i) => i * 10);
}
