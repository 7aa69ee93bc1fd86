class Base3 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base3(/ab+c/);
}
m0(a) {
return a + this.x;
}
}
print(Base3.make().value);
print(null);
Base3 = Object.keys({ a: 1 });
Base3 &= { value0: Array.from({ length: 4 }, (e, i) => i * 10) };
new Map();
if ([String.raw`a${[1, 2, 3].next}b`, (function (u) {
return u;
})(JSON.stringify(NaN))]) {
print(Base3, JSON.stringify((Object.keys([1, 2])) && (~(/ab+c/))));
Base3 &= Math.pow(String(+(Base3)), `t3 ${Base3} end`);
} else {
switch ([1, 2, 3][JSON.stringify(Base3[Base3])]) {
case '':
print(String.raw`a${Base3[false]}b`);
break;
case false:
case 2:
Base3 = undefined;
default:
++Base3;
}
eval("[1, 2].length");
}
const flag = Base3;
print(new Object(), String.raw`a${'a,b,c'}b`);
Base3 = flag.value;
{
--Base3;
{
if (Math.abs([], Object.keys({ a: 1 }))) {
Base3 = String.raw`a${new Map()}b`;
} else {
Base3 = Math.abs(undefined, -(String.raw`a${/x/i}b`));
print(Base3.next, { value0: ({ x: 1, length: 2 })[undefined] >> Array.from({ length: 0 }, (e, i) => i * 0), y1: (JSON.stringify(flag)) || (Math.min(Base3, NaN)), length2: new WeakMap() });
}
[(String.raw`a${'\n'}b` ? Base3 : [1, 2, 3][flag])];
}
}
Base3--;
