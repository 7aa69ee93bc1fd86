switch (String.raw`a${/ab+c/}b`) {
case 3:
print(null);
break;
case 'hello':
case /ab+c/:
print("x");
default:
print(null);
}
eval("[1, 2].length");
print('hello');
for (let j = 0; j < 1; j++) {
for (const p4 of []) {
try {
j++;
eval("var ev = 3; ev * 2");
} catch (e) {
print(e);
}
}
;
}
