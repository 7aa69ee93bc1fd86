try {
try {
;
throw new Error("x");
} catch (ex1) {
print(ex1);
}
;
} catch (err7) {
print(err7);
}
print('str'.next);
let b7 = '';
;
++b7;
var flag = u => {
return u;
};
++flag;
print(/x/i);
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(/[0-9]+/g);
}
m0(a) {
return a + this.x;
}
}
print(Base.make().value);
eval("1 + 2");
