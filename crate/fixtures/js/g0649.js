function wrap() {
print(0x10);
print((String.raw`a${!(null)}b` ? JSON.stringify([...[100, 'hello']]) : [...[/[0-9]+/g, [/x/i, NaN, 'abc']]]), String('hello'));
switch (String('str'.next)) {
case null:
let arr4 = 1;
break;
case '0':
case false:
var item8 = Object.keys({});
default:
`t5 ${Object.keys([1, 2])} end`;
}
return JSON.stringify(['str'.prop, , 'a,b,c']);
}
print(wrap());
(function (u) {
return u;
})(new Date(3));
;
print(/[0-9]+/g);
for (let k of 'ab') {
{
JSON.stringify(String.raw`a${Object.keys({ a: 1 })}b`);
}
}
