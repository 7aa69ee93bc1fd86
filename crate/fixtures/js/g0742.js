var w2 = 0;
do {
w2 += 1;
} while (w2 < 1);
print(new Date());
const x = { x0: (function (u) {
return u;
})(String.raw`a${w2}b`), y1: Object.keys({ a: 1 }) * /ab+c/, p12: (Object.keys({}) ? true : Array.from({ length: 0 }, (e, i) => i * NaN)) };
function make4(tmp) {
let y = /[0-9]+/g;
++tmp;
return new Error();
}
print(make4(/[0-9]+/g));
