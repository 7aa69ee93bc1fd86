print(Math.round(JSON.stringify(undefined), new Map()));
for (var j4 = 0; j4 < 4; j4++) {
switch ([...[(String(j4), String(/ab+c/)), ([j4, , j4]) ?? (j4 < j4)]]) {
case 3:
j4 *= Math.min((j4[j4], j4), (function (u) {
return u;
})((function (u) {
return u;
})("x")));
break;
case false:
case 100:
j4 |= ([new Array(), 'str'[j4], Object.keys({})]) && (undefined);
default:
j4 &= [JSON.stringify((function (u) {
return u;
})(0x10))];
}
print(!(String.raw`a${new Date()}b`));
}
;
var data9 = function (...u) {
return u.length;
};
var str = function* () {
yield '0';
yield* [1, 2];
};
if (str[JSON.stringify([-1, /ab+c/, /[0-9]+/g])]) {
data9 = [[...[Math.floor(data9, data9), String.raw`a${null}b`]], str, new Error()];
class Base {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new Base(false);
}
m1(a) {
return a + this.x;
}
}
class B2 extends Base {
constructor() {
super("x");
}
m0(a) {
return super.m0 ? super.m0(a) : a;
}
}
print(new B2().value);
B2 &= `t7 ${String(new Set())} end`;
}
;
for (const p2 in [1, 2]) {
data9 = typeof ([...[[null, , p2], ('abc' ? null : '\n')]]);
}
eval("[1, 2].length");
