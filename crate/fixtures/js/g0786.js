var m0 = Array.from({ length: 1 }, (e, i) => i * 0);
var str1 = async function () {
return await /ab+c/;
};
;
var w2 = 0;
while (w2 > 0) {
w2--;
let z1 = ({ x: 1, length: 2 })[String(`t2 ${Infinity} end`)];
}
print(((p, q = 100) => p + q)(`t1 ${w2[0x10]} end`), 3);
print(new Set(), new Array(10));
str1 = ((p, q = 1) => p + q)((100) && ("x")) << JSON.stringify((m0) || (str1));
debugger;
try {
print(new Error(), ((function (u) {
return u;
})(new Array()) ? typeof ([...[str1, str1]]) : String(w2)));
throw new RangeError('');
} catch (err) {
print(err);
}
