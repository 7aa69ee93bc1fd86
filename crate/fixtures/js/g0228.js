var w8 = 1;
while (w8 > 0) {
w8--;
function g1() {
eval("1 + 2");
eval("[1, 2].length");
if (new.target) {
print('ctor');
}
print(arguments.length);
return new Object(1);
}
print(g1());
}
w8--;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
print(Object.keys({}));
function wrap(key, x1) {
x1 |= '';
if (key) {
++x1;
} else {
x1 = new Error();
}
if (new.target) {
print('ctor');
}
return new Array() >> [] ^ x1;
}
wrap(255, undefined);
