function risky(kind) {
  switch (kind) {
    case "type":
      null.f();
    case "range":
      new Array(-1);
    case "ref":
      return undefinedThing;
    case "uri":
      decodeURIComponent("%");
    default:
      throw new Error("custom " + kind);
  }
}
var seen = [];
for (var kind of ["type", "range", "ref", "uri", "other"]) {
  try {
    risky(kind);
  } catch (e) {
    seen.push(e.constructor.name);
  } finally {
    seen.push(".");
  }
}
try {
  eval("print('from eval'); var fromEval = 1;");
} catch {
  seen.push("no eval");
}
print(seen.join(" "), typeof fromEval);
