"use strict";
var point = { x: 1, y: 2, name: "origin" };
try {
  point.z = point.x + point.y;
  throw new TypeError(point.name);
} catch (err) {
  print(err.message.length);
}
