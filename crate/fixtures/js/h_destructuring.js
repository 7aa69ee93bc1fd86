var { a, b: { c = 5 } = {}, ...others } = { a: 1, b: { c: undefined }, d: 4, e: 5 };
var [x, , y = 10, ...rest] = [1, 2, undefined, 4, 5];
function take({ name, tags: [first] = [] }, ...more) {
  return name + first + more.length;
}
var swap1 = 1, swap2 = 2;
[swap1, swap2] = [swap2, swap1];
print(a, c, Object.keys(others).length, x, y, rest.length, take({ name: "n", tags: ["t"] }, 1, 2), swap1);
