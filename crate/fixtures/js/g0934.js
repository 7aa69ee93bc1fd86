switch (String((function (u) {
return u;
})(0x10))) {
case false:
for (var p in [1, 2]) {
for (let j7 = 0; j7 < 2; j7++) {
;
print(String('hello'), (j7, (function (u) {
return u;
})({ next0: "x", p01: j7, next2: '0' })));
}
}
break;
case null:
case 1e3:
print(String.raw`a${`t6 ${true} end`}b`);
default:
new Date(3);
}
eval("print('e')");
for (var p6 in { a: 1, b: 2 }) {
new Object(1);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
var arr2 = JSON.stringify((function (u) {
return u;
})(JSON.stringify(null)));
