;
print(/x/i);
eval("[1, 2].length");
;
print(new Object(), Object.keys({}));
var y = async function () {
return await '\n';
};
const flag = y;
