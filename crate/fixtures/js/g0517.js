eval("[1, 2].length");
print(true);
const c = NaN;
{
print('');
;
}
switch ({ length0: (new Object(3) ? c : String(c)), x1: false, x2: new Map() }) {
case '\u0041':
const res0 = Object.keys({});
break;
case null:
case /ab+c/:
;
default:
;
}
function compute() {
try {
;
} catch (e) {
print(e.message);
}
if (new.target) {
print('ctor');
}
return Object.keys({});
}
print(compute());
