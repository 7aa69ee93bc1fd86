;
debugger;
print(Object.keys({}));
print(String.raw`a${(true) ?? (/[0-9]+/g) / new Set()}b`, (Object.keys([1, 2]), (function (u) {
return u;
})(new Object())));
