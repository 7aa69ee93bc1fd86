var [tmp, , ...rest] = [/ab+c/, 2, 3];
print(null);
++tmp;
tmp++;
var w9 = 0;
do {
w9 += 1;
} while (w9 < 3);
{
w9--;
w9 &= JSON.stringify(w9);
}
