;
function h(a0) {
;
print(void (String(a0)), !(Object.keys({})));
return new Map();
}
print(h(100));
for (let p1 in [1, 2]) {
var item1 = u => {
return u;
};
}
const item4 = ('', ~((function (u) {
return u;
})(Infinity)));
print(1e3);
for (var k in { a: 1, b: 2 }) {
eval("1 + 2");
}
item4;
