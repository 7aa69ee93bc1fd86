{
eval("var ev = 3; ev * 2");
function wrap6(count) {
print([new Object(), , new Object()], [new Set()]);
print(arguments.length);
return new Map();
}
print(wrap6(/ab+c/));
}
print(null, [...[!(Object.keys({ a: 1 })), String(String(255))]]);
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue outer;
}
}
print(null);
;
print(0x10);
print(new WeakMap(), '\n' | Math.sqrt(Object.keys([1, 2]), ('hello') && (/ab+c/)));
;
;
