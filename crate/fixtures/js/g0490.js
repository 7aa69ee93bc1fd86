;
;
;
((p, q = /x/i) => p + q)((function (u) {
return u;
})('\u0041')) >>> (function (u) {
return u;
})('\u0041');
