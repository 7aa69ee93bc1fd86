print(/[0-9]+/g);
;
{
{
try {
;
throw new TypeError("x");
} catch (e) {
print(e);
}
}
}
;
;
new Map();
