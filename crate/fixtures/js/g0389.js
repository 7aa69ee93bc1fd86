const key = JSON.stringify(JSON.stringify(String(/ab+c/)));
;
eval("1 + 2");
print(false);
if (Math.round([JSON.stringify(key), (undefined ? key : key)], Object.keys({}))) {
if (key) {
var item = function* () {
yield null;
yield* [1, 2];
};
print({ y0: false });
} else {
for (let p4 of 'ab') {
p4 |= `t1 ${p4} end`;
}
}
;
} else {
;
}
eval("1 + 2");
print(false);
