;
for (var i = 0; i < 5; i++) {
for (let p5 in { a: 1, b: 2 }) {
i <<= ((p, q = 'abc') => p + q)(['\u0041', /x/i, "x"]) | (String.raw`a${''}b`, (p5, true));
}
print(String((+(i), (function (u) {
return u;
})('hello'))));
}
var tmp6 = [JSON.stringify(undefined), `t5 ${(/x/i) ?? (/ab+c/)} end`, (Object.keys([1, 2]) ? Math.floor(null, '\n') : ['', '0', /ab+c/])];
;
