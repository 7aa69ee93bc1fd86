[1, 2, 3][[]];
switch ({ x0: Math.min((2) && (2), { next0: /[0-9]+/g, value1: 10 }), p11: new Date(), value2: null }) {
case '\u0041':
print(`t2 ${Infinity} end`, Array.from({ length: 3 }, (e, i) => i * -1));
break;
case NaN:
case 10:
print(false);
default:
print(new Date());
}
var [item0, , ...tail8] = [true, 2, 3];
item0 = item0;
