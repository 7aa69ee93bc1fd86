Math.min(3, `t6 ${('hello', "x")} end`);
print(true);
;
;
Array.from({ length: 4 }, (e, i) => i * 0x10);
switch ((function (u) {
return u;
})(undefined >> null) & (function (u) {
return u;
})(Object.keys({ a: 1 }))) {
case 10:
print(([...[(function (u) {
return u;
})(undefined), /[0-9]+/g >= null]], `t4 ${(/[0-9]+/g, '0')} end`));
break;
case /x/i:
case /ab+c/:
;
default:
print(null);
}
const b = Array.from({ length: 4 }, (e, i) => i * -1);
print('a,b,c');
