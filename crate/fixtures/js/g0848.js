eval("1 + 2");
for (let i1 = 0; i1 < 4; i1++) {
var w = 0;
do {
w += 1;
} while (w < 4);
w = (([...[w, w]] ? i1[null] : true - i1) ? (function (u) {
return u;
})(true) + 'str'[w] : w[i1.y]);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 1) continue;
}
}
print([...[[1, 2, 3][{ next0: 1e3, p01: /[0-9]+/g, next2: 1 }], String('str'.p1)]], Math.sqrt(('0', Math.floor("x", /x/i)), 'str'.p1));
;
print([1, 2, 3][({ x: 1, length: 2 }).length]);
var w26 = 0;
do {
w26 += 1;
} while (w26 < 1);
