print(null);
switch (`t3 ${(new WeakMap()) ?? (JSON.stringify(/ab+c/))} end`) {
case false:
print(Math.min(~(Math.sqrt(false, 3)), { p10: JSON.stringify('\n') }), Array.from({ length: 2 }, (e, i) => i * -1));
break;
case undefined:
case 1e3:
print(0x10);
default:
;
}
;
{
var x = { x, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['']: 1, ...{ q: 2 } };
}
var w = 0;
do {
w += 1;
} while (w < 3);
++w;
