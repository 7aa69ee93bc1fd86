print(Object.keys({}));
print('abc');
;
var w = 0;
do {
w += 1;
} while (w < 3);
for (var p in { a: 1, b: 2 }) {
var w15 = 1;
while (w15 > 0) {
w15--;
switch (Math.min(undefined % new Set(), [(2) && (1e3), , void (w)])) {
case /[0-9]+/g:
p--;
break;
case '0':
case 'a,b,c':
;
default:
typeof (new Error(1));
}
}
}
