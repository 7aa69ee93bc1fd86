var w6 = 0;
do {
w6 += 1;
} while (w6 < 3);
print([(function (u) {
return u;
})(false), w6]);
eval("print('e')");
function helper() {
try {
--w6;
throw new Error('\u0041');
} catch (ex6) {
print(ex6.message);
}
if (new.target) {
print('ctor');
}
return Math.max((JSON.stringify(w6)) || (new Date()), w6);
}
print(helper());
w6 = (function (u) {
return u;
})(((w6 ? w6 : w6), 'a,b,c'));
