{
;
new Set();
}
try {
for (const p of 'ab') {
print(false);
}
} catch (err) {
print(err.message);
}
let m = 3;
--m;
print(JSON.stringify(([m, m, undefined], (m ? 0 : m))), /[0-9]+/g);
function run(c4, y6) {
y6 = false;
;
var b = 'str'[y6];
if (new.target) {
print('ctor');
}
return ({ x: 1, length: 2 }).y;
}
print(run(0.5, ''));
