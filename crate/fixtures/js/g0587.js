if ((new Map()) || (['str'[false], , String.raw`a${3}b`])) {
[(Array.from({ length: 2 }, (e, i) => i * 1), new Object(1)), JSON.stringify(JSON.stringify('0')), (function (u) {
return u;
})((function (u) {
return u;
})(/x/i))];
}
;
try {
!(Object.keys({}));
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 1) break outer;
}
}
throw new RangeError('');
} catch (err) {
print(err.message);
}
print('str'.y, 3);
