eval("print('e')");
try {
print((/ab+c/ ? String(/ab+c/) : `t1 ${false} end`) >= { x0: new Array() }, (false) && (`t4 ${255} end`));
JSON.stringify(Object.keys({}));
} catch (err0) {
print(err0.message);
}
function run(obj0, b) {
print((function (u) {
return u;
})(Object.keys([1, 2])), JSON.stringify(obj0.length % ((p, q = true) => p + q)(obj0)));
let z4 = [...[((p, q = /ab+c/) => p + q)(JSON.stringify(b)), []]];
var w = 2;
while (w > 0) {
w--;
;
}
if (new.target) {
print('ctor');
}
print(arguments.length);
return '\n';
}
run(0.5, /[0-9]+/g);
eval("[1, 2].length");
