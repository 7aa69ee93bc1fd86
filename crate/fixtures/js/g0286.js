print(false, Array.from({ length: 4 }, (e, i) => i * NaN));
eval("[1, 2].length");
var res = u => {
return u;
};
{
for (var i6 = 0; i6 < 4; i6++) {
;
for (var j = 0; j < 5; j++) {
;
print(new Array(3), new Map());
}
}
}
