print('hello');
function run(acc5, z2) {
for (let k9 of [1, 2, 3]) {
--acc5;
}
const z4 = [(function (u) {
return u;
})(((p, q = /[0-9]+/g) => p + q)(acc5)), , ((p, q = false) => p + q)((function (u) {
return u;
})(true))];
return [acc5, , { y0: String.raw`a${1}b` }];
}
print(run(3, 1));
switch ([1, 2, 3].next) {
case null:
print((new Date()) ?? (String.raw`a${new WeakMap()}b`), ~(Math.min(new Error(3), new Object())));
break;
case 3:
case 'abc':
print(/[0-9]+/g);
default:
print({ value0: Math.floor(new Set(), /x/i & null) }, JSON.stringify([undefined, , new Array()]));
}
print(String(`t4 ${true} end`), [...[[String('\n'), new Error(), `t2 ${/ab+c/} end`], /x/i]]);
;
