let a0 = `t0 ${(function (u) {
return u;
})(String.raw`a${'\n'}b`)} end`;
var m5 = async function () {
return await undefined;
};
eval("1 + 2");
eval("print('e')");
var { x: obj8 = /[0-9]+/g, ...tail3 } = { x: 1 };
for (var k of [1, 2, 3]) {
;
}
;
m5--;
m5++;
--obj8;
