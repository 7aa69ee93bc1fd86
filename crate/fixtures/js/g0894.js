;
for (const k3 of [1, 2, 3]) {
var res8 = (u, v = /ab+c/) => u + v;
}
print('');
var [key5, , ...rest] = [0x10, 2, 3];
