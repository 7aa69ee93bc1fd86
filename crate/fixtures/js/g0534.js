{
var data = Array.from({ length: 2 }, (e, i) => i * 1e3);
function wrap4() {
++data;
data++;
if (new.target) {
print('ctor');
}
return ~(Object.keys({}));
}
print(wrap4());
}
[];
;
;
print(((/[0-9]+/g ? true : /x/i) === new Object(10) ? (String.raw`a${/x/i}b` ? (/x/i ? /[0-9]+/g : /[0-9]+/g) : (/x/i, 10)) : JSON.stringify('a,b,c' > /ab+c/)), false);
;
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) break outer;
}
}
print(true);
const y = false;
