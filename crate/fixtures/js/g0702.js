var w = 3;
while (w > 0) {
w--;
print(/[0-9]+/g);
}
w = (function (u) {
return u;
})(~(`t3 ${255} end`));
function helper() {
print(JSON.stringify(Math.min('\n', w) & JSON.stringify(w)), (w[JSON.stringify(w)]) && (Array.from({ length: 4 }, (e, i) => i * 2)));
if (new.target) {
print('ctor');
}
return String(String(`t4 ${null} end`));
}
print(helper());
let b = new Map();
++b;
b = { p00: w.p0 };
w &= b;
