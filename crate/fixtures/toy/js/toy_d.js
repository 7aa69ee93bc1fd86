class Counter {
  constructor(start) {
    this.count = start;
  }
  step() {
    this.count++;
    return this.count;
  }
}
var c = new Counter(5);
while (c.step() < 8) {}
print(c.count);
