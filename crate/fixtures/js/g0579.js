Object.keys({ a: 1 });
if (new Set()) {
;
eval("print('e')");
;
} else {
let data4 = String(Array.from({ length: 4 }, (e, i) => i * 0));
--data4;
}
var w = 1;
while (w > 0) {
w--;
w = w;
}
{
const z = new Date(0);
var c = z;
}
for (var i1 = 0; i1 < 5; i1++) {
print(JSON.stringify(JSON.stringify([...[undefined, w]])));
i1[`t0 ${new Array(10)} end`];
}
w = w.p0;
