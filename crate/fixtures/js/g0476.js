const key3 = -(/ab+c/);
const str = [(function (u) {
return u;
})(String.raw`a${key3}b`), , String.raw`a${'str'.prop}b`];
print(1);
{
debugger;
}
{
var w = 0;
do {
w += 1;
} while (w < 4);
}
print(1e3);
eval("1 + 2");
print(undefined);
