function f0() {
;
var w = 0;
do {
w += 1;
} while (w < 2);
print(arguments.length);
return (function (u) {
return u;
})(new Map() >= (1, /[0-9]+/g));
}
print(f0());
;
for (const k9 of [1, 2, 3]) {
let a8 = (function (u) {
return u;
})((function (u) {
return u;
})(new Map()));
}
;
print('\u0041');
