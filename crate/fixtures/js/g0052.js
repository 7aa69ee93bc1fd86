print(String.raw`a${({ x: 1, length: 2 })[(null ? true : 0)]}b`);
{
print(1);
}
(Math.min(new Error(), { p10: -1, p11: 'hello', next2: 'abc' }), `t0 ${Math.abs(10, "x")} end`);
eval("[1, 2].length");
for (let i7 = 0; i7 < 5; i7++) {
for (let k8 = 0; k8 < 2; k8++) {
debugger;
print(void (10), (new Error(10), []));
}
eval("var ev = 3; ev * 2");
}
const n9 = Object.keys({ a: 1 });
;
