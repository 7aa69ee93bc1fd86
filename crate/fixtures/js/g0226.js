var { value: c1 = false, ...rest } = { x: 1 };
function helper2() {
print(Math.pow(({ next0: c1, value1: c1, value2: c1 }, (true, c1)), Math.min(new WeakMap(), Object.keys({ a: 1 }))));
print(arguments.length);
return (function (u) {
return u;
})({ x0: String('\u0041'), length1: Array.from({ length: 4 }, (e, i) => i * 10), p02: [...[c1, true]] });
}
print(helper2());
for (let j6 = 0; j6 < 4; j6++) {
print((String.raw`a${new WeakMap()}b`, c1));
;
}
const b1 = { value0: !('str'[100]), prop1: helper2(Math.min(c1, c1)), y2: (function (u) {
return u;
})([c1, c1, -1]) };
var obj5 = async function () {
return await 3;
};
