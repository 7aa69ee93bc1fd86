{
~(Math.round('\n', Object.keys([1, 2])));
;
}
;
var x9 = true;
x9 -= (Math.sqrt(String(x9), (function (u) {
return u;
})(/[0-9]+/g)) ? [...[JSON.stringify(x9), (function (u) {
return u;
})(x9)]] : '\u0041');
