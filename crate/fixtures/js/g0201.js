;
switch (new WeakMap()) {
case /x/i:
print(undefined);
break;
case "x":
case /[0-9]+/g:
print((function (u) {
return u;
})((new Error(0), ['hello'])));
default:
;
}
print((function (u) {
return u;
})(({ x: 1, length: 2 }).p0));
;
({ value0: undefined });
