function area(w, h) {
  var scale = w > h ? 2 : 1;
  return w * h * scale;
}
var shapes = [[1, 2], [3, 4], [5, 6]];
var sum = 0;
sum = sum + area(shapes[0][0], shapes[0][1]);
print(sum);
