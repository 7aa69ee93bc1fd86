function* range(start, end, step = 1) {
  for (let i = start; i < end; i += step) {
    yield i;
  }
}
function* both() {
  yield* range(0, 3);
  const got = yield "mid";
  return got;
}
var total = 0;
for (const v of range(0, 10, 3)) {
  total += v;
}
var it = both();
it.next();
print(total, [...range(1, 4)].join(","), it.next().value);
