new Object(0);
(JSON.stringify('0')) ?? ({ prop0: new Map(), y1: (/x/i) && ('hello'), p02: typeof (/x/i) });
print((function (u) {
return u;
})(new Error(10)), new Map());
var tmp = async function () {
return await true;
};
var flag = async function () {
return await 'hello';
};
{
try {
flag++;
tmp = Math.min(new Object() === (function (u) {
return u;
})(flag), (function (u) {
return u;
})([...[tmp, tmp]]));
} catch (err) {
print(err);
} finally {
if (Math.round(Math.floor(Array.from({ length: 3 }, (e, i) => i * 2), { prop0: tmp }), +(Array.from({ length: 3 }, (e, i) => i * NaN)))) {
var data6 = '0';
--tmp;
/ab+c/;
}
}
}
{
print(((p, q = -1) => p + q)(flag[(function (u) {
return u;
})(tmp)]));
print(Object.keys([1, 2]), new Set());
}
