var w6 = 2;
while (w6 > 0) {
w6--;
var [z, , ...tail] = [undefined, 2, 3];
}
w6 += 255;
--w6;
;
w6 -= [Object.keys({}), , w6.y];
w6;
eval("print('e')");
function check0(val) {
var x = `t5 ${(Math.pow(/ab+c/, true), String(3))} end`;
return (String.raw`a${Math.round(val, 255)}b`) && (Math.round(x.x, [...[x, 10]]));
}
print(check0(true));
