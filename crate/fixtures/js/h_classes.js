class Shape {
  constructor(name) {
    this.name = name;
  }
  get label() {
    return `shape:${this.name}`;
  }
  set label(v) {
    this.name = v;
  }
  static create(n) {
    return new this(n);
  }
  area() {
    return 0;
  }
}
class Square extends Shape {
  constructor(side) {
    super("square");
    this.side = side;
  }
  area() {
    return this.side * this.side + super.area();
  }
}
var Anon = class Named {
  who() {
    return typeof Named;
  }
};
var sq = new Square(3);
sq.label = "sq";
print(sq.label, sq.area(), Square.create(2) instanceof Shape, new Anon().who());
