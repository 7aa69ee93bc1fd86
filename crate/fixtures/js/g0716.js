const tmp8 = String({ next0: new WeakMap() });
for (var k7 in [1, 2]) {
print(String(Object.keys({ a: 1 })), ((new Date(1), Object.keys({})) ? k7 : (function (u) {
return u;
})(new Map())));
}
;
print(/ab+c/);
;
