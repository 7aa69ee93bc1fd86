print((JSON.stringify(JSON.stringify(false))) && ('str'[Array.from({ length: 3 }, (e, i) => i * 10)]), new Map());
const flag = /x/i;
print(/x/i, flag);
{
;
}
