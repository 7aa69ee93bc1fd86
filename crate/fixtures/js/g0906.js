var w = 0;
do {
w += 1;
} while (w < 2);
switch (w) {
case /x/i:
for (let p2 in [1, 2]) {
--p2;
}
break;
case 100:
case /[0-9]+/g:
w <<= "x";
default:
eval("print('e')");
}
w = +((((p, q = 'hello') => p + q)(w)) && (+(/[0-9]+/g)));
--w;
print(2);
;
w = ([new Date(1)], new Error());
let count = ~(String.raw`a${'str'[w]}b`);
count--;
