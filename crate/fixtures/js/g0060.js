var key = async function () {
return await /ab+c/;
};
{
key = JSON.stringify(new Set());
}
for (var j5 = 0; j5 < 2; j5++) {
print((String('' == j5) ? (typeof (true) ? (null ? key : key) : void (j5)) : [[key, , j5], , (j5 ? 0 : j5)]), key);
key = Object.keys([1, 2]);
}
;
