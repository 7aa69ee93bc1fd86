async function delay(v) {
  return v;
}
async function main() {
  var a = await delay(1);
  var b = await Promise.all([delay(2), delay(3)]);
  try {
    await Promise.reject(new RangeError("no"));
  } catch (e) {
    print(e.name);
  }
  return a + b[0] + b[1];
}
var arrow = async (x) => (await x) * 2;
main().then((r) => print(r));
arrow(Promise.resolve(4)).then(print);
