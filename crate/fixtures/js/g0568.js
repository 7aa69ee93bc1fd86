print(0x10);
{
var obj9 = function* () {
yield '\n';
yield* [1, 2];
};
}
let y = (10, JSON.stringify('0'));
;
for (const p3 of []) {
y = p3;
}
