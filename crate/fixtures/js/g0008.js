const arr1 = (new Date(3)) ?? (Object.keys([1, 2]));
var w6 = 0;
do {
w6 += 1;
} while (w6 < 3);
w6 = arr1[new Map()];
print([...[(new Map() ? Math.min(arr1, arr1) : { p00: arr1, length1: w6, y2: "x" }), String([...[arr1, arr1]])]]);
++w6;
w6 <<= new Date(3);
print(new Map(), w6);
