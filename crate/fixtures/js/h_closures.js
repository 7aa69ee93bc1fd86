function counter(start) {
  var count = start;
  return {
    inc() {
      return ++count;
    },
    get value() {
      return count;
    },
  };
}
function Maker() {
  if (!new.target) {
    return new Maker();
  }
  this.made = arguments.length;
}
var c = counter(5);
c.inc();
c.inc();
var fns = [];
for (let i = 0; i < 3; i++) {
  fns.push(() => i);
}
var self = (function () {
  return this;
}).call({ tag: 1 });
print(c.value, fns.map((f) => f()).join(""), new Maker(1, 2).made, Maker().made, self.tag);
