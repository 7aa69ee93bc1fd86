var base = { greet() { return "hi " + this.name; } };
var key = "dyn";
var obj = {
  name: "o",
  [key + "amic"]: 1,
  "quoted key": 2,
  42: "answer",
  __proto__: base,
  ...{ spread: true },
};
var copy = Object.assign({}, obj);
var arr = Array.from(new Set([3, 1, 3, 2])).sort((p, q) => p - q);
var map = new Map([["a", 1]]);
map.set("b", 2);
var json = JSON.parse(JSON.stringify({ list: arr, nested: { ok: true } }));
print(obj.greet(), obj.dynamic, obj["quoted key"], copy.spread, arr, map.size, json.nested.ok, Math.max(...arr));
