var o = { n: 1, arr: [1, 2, 3] };
var r = [
  typeof o,
  void 0,
  !o.n,
  -o.n,
  +"3",
  ~5,
  "n" in o,
  o instanceof Object,
  delete o.n,
  o.n ?? "gone",
  o.arr.length,
  1 < 2 && 2 > 1 || false,
  (1, 2, 3),
  o.arr.length > 2 ? "long" : "short",
  2 ** 10,
  7 % 3,
  1 << 4 >> 2 >>> 1,
  5 & 3 | 8 ^ 2,
];
var z = 1;
z += 2;
z -= 1;
z *= 3;
z /= 2;
z %= 5;
z **= 2;
z <<= 1;
z >>= 1;
z >>>= 0;
z &= 7;
z |= 8;
z ^= 1;
print(r.length, z, z++, ++z, z--, --z);
