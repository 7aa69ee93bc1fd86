{
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 2) break outer;
}
}
;
}
print('');
;
for (var j = 0; j < 4; j++) {
(function (u) {
return u;
})(([/x/i] ? (true, j) : (function (u) {
return u;
})(j)));
print(new Set(), new Object(0));
}
;
;
;
