;
print(true);
for (let j = 0; j < 2; j++) {
j = Math.round(typeof (new Map()), j);
switch (JSON.stringify(String.raw`a${(j) || (j)}b`)) {
case /[0-9]+/g:
print(Array.from({ length: 4 }, (e, i) => i * 0.5));
break;
case false:
case true:
j -= j;
default:
(((p, q = 'a,b,c') => p + q)([1, 2, 3].value)) && (j);
}
}
var str4 = async function () {
return await 0.5;
};
str4 *= Math.min(Array.from({ length: 3 }, (e, i) => i * -1), JSON.stringify(Object.keys({})));
str4--;
--str4;
print(Array.from({ length: 3 }, (e, i) => i * 2));
eval("[1, 2].length");
str4++;
