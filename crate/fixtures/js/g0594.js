for (let j = 0; j < 3; j++) {
outer: for (var q1 = 0; q1 < 3; q1++) {
for (var r1 = 0; r1 < 3; r1++) {
if (r1 === 0) break outer;
}
}
let a2 = Object.keys([1, 2]);
}
print('', (function (u) {
return u;
})((Object.keys([1, 2]) ? [...[255, 10]] : String(/ab+c/))));
var y6 = u => {
return u;
};
debugger;
var w = 2;
while (w > 0) {
w--;
print((~(new Date()) ? new Set() : -(w.next)));
}
print(String(-(JSON.stringify(undefined))), new Set());
;
