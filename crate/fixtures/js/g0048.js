String.raw`a${undefined}b`;
;
;
for (const k of [1, 2, 3]) {
eval("[1, 2].length");
}
for (let k1 in [1, 2]) {
var w9 = 2;
while (w9 > 0) {
w9--;
function make(n5, n6) {
debugger;
;
++w9;
return (function (u) {
return u;
})(Object.keys({}));
}
print(make(false, null));
}
}
var obj2 = u => {
return u;
};
;
obj2--;
