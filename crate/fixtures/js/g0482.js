const tmp4 = `t6 ${({ x: 1, length: 2 }).p1} end`;
[1, 2, 3][Object.keys({ a: 1 })] >>> (function (u) {
return u;
})(tmp4);
function helper() {
;
for (var j = 0; j < 4; j++) {
;
print(JSON.stringify({ p10: 100 }), [...[[1, 2, 3][[/ab+c/, , 'hello']], JSON.stringify(new Map())]]);
}
if (new.target) {
print('ctor');
}
return tmp4;
}
helper();
typeof (tmp4[tmp4]);
