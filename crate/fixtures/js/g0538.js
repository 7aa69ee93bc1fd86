eval("[1, 2].length");
print('\u0041');
var w = 0;
while (w > 0) {
w--;
++w;
}
function helper(acc) {
print([1, 2, 3][String(w[/ab+c/])], new Object());
[...[true, ((function (u) {
return u;
})(true)) ?? ((function (u) {
return u;
})(w))]];
print(arguments.length);
return +(Object.keys({}));
}
print(helper(2));
var data = { w, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
w++;
{
data++;
}
