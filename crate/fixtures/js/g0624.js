var w = 3;
while (w > 0) {
w--;
try {
var w6 = 0;
do {
w6 += 1;
} while (w6 < 4);
outer: for (var q2 = 0; q2 < 3; q2++) {
for (var r2 = 0; r2 < 3; r2++) {
if (r2 === 1) break;
}
}
throw new TypeError("x");
} catch (err) {
print(err);
}
}
debugger;
w = new Set();
var key = function (...u) {
return u.length;
};
for (let i = 0; i < 4; i++) {
for (var k = 0; k < 4; k++) {
print(('') && (String.raw`a${[k, , i]}b`), i);
var acc = async function () {
return await '\n';
};
}
{
print([], JSON.stringify(!(false !== NaN)));
}
}
