for (var k = 0; k < 1; k++) {
const data = `t2 ${typeof (k) >>> Math.abs(null, /ab+c/)} end`;
;
}
;
print('\u0041');
;
for (const p in { a: 1, b: 2 }) {
for (let i = 0; i < 1; i++) {
var w6 = 0;
while (w6 > 0) {
w6--;
;
}
i = [...[Array.from({ length: 4 }, (e, i) => i * 0.5) - i.y, (/ab+c/) ?? ([])]];
}
}
var n3 = Math.min(new Set(), new Error(3)) !== [...[[100], 3]];
print(true, String((function (u) {
return u;
})(n3[/[0-9]+/g])));
;
var { next: obj = /ab+c/, ...rest2 } = { x: 1 };
