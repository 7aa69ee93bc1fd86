var arr = async function () {
return await true;
};
var w5 = 0;
do {
w5 += 1;
} while (w5 < 4);
var w3 = 0;
do {
w3 += 1;
} while (w3 < 4);
var n = w3;
w5 = [...[-(String.raw`a${undefined}b`), new Set()]];
var w = 0;
do {
w += 1;
} while (w < 4);
const key = /x/i;
print(+(new Map()), w5);
w3 = String.raw`a${w5[[null, , '\n']]}b`;
