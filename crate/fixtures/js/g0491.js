var data = /x/i;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue outer;
}
}
function wrap8() {
data++;
print(arguments.length);
return ('\n' ? [data >>> 10, , [data, , data]] : `t8 ${(function (u) {
return u;
})(255)} end`);
}
print(wrap8());
--data;
switch ({ x0: [...[Array.from({ length: 4 }, (e, i) => i * 1), [255, , 'abc']]], next1: Array.from({ length: 3 }, (e, i) => i * 100), length2: typeof (new Date()) }) {
case /x/i:
print(data, String.raw`a${Math.min([false], data[data])}b`);
break;
case undefined:
case undefined:
let z4 = [...[data.prop, String(String.raw`a${data}b`)]];
default:
z4--;
}
data *= JSON.stringify(new Map());
