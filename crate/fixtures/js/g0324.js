print(JSON.stringify(Array.from({ length: 0 }, (e, i) => i * 100) > new Error(1)));
;
print(null);
;
var item4 = function (...u) {
return u.length;
};
item4--;
{
{
try {
let val = /[0-9]+/g;
;
} catch (e2) {
print(e2.message);
} finally {
print((`t3 ${[item4, item4, item4]} end`, item4[("x", 1)]));
}
var w9 = 1;
while (w9 > 0) {
w9--;
const b = ((item4 ? NaN : 0.5) << Object.keys({}), [...[(/[0-9]+/g ? item4 : true), true]]);
}
}
item4 &= [...[{ prop0: item4[item4], length1: [...['', /x/i]] }, ({ x: 1, length: 2 }).prop]];
}
item4 |= [...[(/x/i) || (item4), (function (u) {
return u;
})([0.5, item4, null])]];
++item4;
