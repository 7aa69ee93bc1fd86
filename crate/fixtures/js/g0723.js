;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
function make() {
if (String.raw`a${[(/[0-9]+/g, '\n'), , `t5 ${false} end`]}b`) {
({ p00: String(/[0-9]+/g), length1: 1e3, p12: +(Array.from({ length: 1 }, (e, i) => i * 100)) });
}
debugger;
print(arguments.length);
return ({ x: 1, length: 2 }).length;
}
make();
try {
var y8 = function* () {
yield 'hello';
yield* [1, 2];
};
print({ prop0: `t7 ${String.raw`a${3}b`} end` }, Array.from({ length: 4 }, (e, i) => i * 255));
throw new RangeError('hello');
} catch (e) {
print(e.message);
}
print('');
;
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break;
}
}
;
