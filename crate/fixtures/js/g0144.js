print(((p, q = /ab+c/) => p + q)(3), []);
void (String.raw`a${{ value0: /x/i, prop1: true }}b`);
{
print(((function (u) {
return u;
})(Object.keys({}))) && (['str'.x]), (Array.from({ length: 1 }, (e, i) => i * NaN)) || (({ x: 1, length: 2 }).prop));
}
print(/ab+c/);
