outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
print("x");
for (let i2 = 0; i2 < 2; i2++) {
let c = Infinity;
i2 = c;
}
switch (['0', String(JSON.stringify(undefined)), { next0: [''], p11: new WeakMap(), length2: new Object() }]) {
case null:
print('\n');
break;
case /[0-9]+/g:
case null:
print(new Error());
default:
;
}
