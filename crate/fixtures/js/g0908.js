function run6(acc6) {
{
;
var acc = Array.from({ length: 2 }, (e, i) => i * 1);
}
return JSON.stringify(/x/i);
}
run6(/x/i);
;
'str'[String.raw`a${Array.from({ length: 0 }, (e, i) => i * 2)}b`];
var w0 = 0;
do {
w0 += 1;
} while (w0 < 3);
var { prop: res8 = false, ...rest } = { x: 1 };
w0 -= (function (u) {
return u;
})(String.raw`a${[res8, res8, w0]}b`);
