print("x");
const b = [`t3 ${Array.from({ length: 2 }, (e, i) => i * 100)} end`, , Array.from({ length: 4 }, (e, i) => i * 0x10)];
var tmp = function* () {
yield true;
yield* [1, 2];
};
print((Object.keys({}), { length0: Object.keys([1, 2]), x1: [tmp, , tmp], p02: String(tmp) }));
