var log = [];
outer: for (var i = 0; i < 4; i++) {
  inner: for (var j = 0; j < 4; j++) {
    if (j === i) continue outer;
    if (i + j > 4) break inner;
    log.push(i * 10 + j);
  }
}
var k = 0;
do {
  k++;
} while (k < 3);
while (true) {
  if (--k < 0) break;
}
switch (log.length) {
  case 0:
    print("none");
    break;
  case 1:
  case 2:
    print("few");
    break;
  default:
    print("many", log);
}
for (var key in { p: 1, q: 2 }) {
  ;
}
for (var s = 0, t = 10; s < t; s++, t--) {}
debugger;
print(k, s, t, key);
