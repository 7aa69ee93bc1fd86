print(Object.keys({ a: 1 }));
null;
print(String({ value0: Array.from({ length: 4 }, (e, i) => i * 2), x1: /[0-9]+/g }));
try {
print(undefined);
throw new TypeError('\n');
} catch (ex5) {
print(ex5.message);
}
;
const item = [...[(undefined) && (/x/i), (String('') ? `t8 ${1e3} end` : (function (u) {
return u;
})('0'))]];
print(Object.keys({}), false);
switch (item.next) {
case /ab+c/:
for (var p in { a: 1, b: 2 }) {
;
}
break;
case /[0-9]+/g:
case /[0-9]+/g:
'hello';
default:
print(/[0-9]+/g);
}
