for (var p of []) {
print([JSON.stringify([p, , 'a,b,c']), , 'str'.x]);
}
outer: for (var q0 = 0; q0 < 3; q0++) {
for (var r0 = 0; r0 < 3; r0++) {
if (r0 === 0) continue;
}
}
const n = ((function (u) {
return u;
})(Math.pow("x", /[0-9]+/g))) && (/ab+c/ >= new WeakMap());
var y16 = async function () {
return await 1;
};
