;
print(/[0-9]+/g);
try {
JSON.stringify(Math.pow("x" >>> /ab+c/, ((p, q = /x/i) => p + q)('0')));
} catch (ex) {
print(ex);
}
print(1e3);
print([(new Array(10), JSON.stringify('hello')), , 1], ({ x: 1, length: 2 }).prop);
var item2 = async function () {
return await 'a,b,c';
};
try {
var b8 = { b8, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['a,b,c']: 1, ...{ q: 2 } };
const x5 = `t8 ${([false, '\u0041'], Object.keys([1, 2]))} end`;
throw new RangeError("x");
} catch (err8) {
print(err8);
} finally {
item2 = new Map();
}
function run5(m) {
{
const b4 = (({ next0: 'hello', prop1: item2, length2: 10 }) && (new WeakMap()) ? String.raw`a${[...[m, /x/i]]}b` : (typeof (0.5), ('abc', '\u0041')));
print((((p, q = 'hello') => p + q)((function (u) {
return u;
})('0'))) && (/ab+c/ / /[0-9]+/g), (Math.pow(b4, Object.keys({})), JSON.stringify((m) && (false))));
}
eval("print('e')");
function f(key) {
item2--;
const x = ({ x: 1, length: 2 }).p1;
print(Array.from({ length: 2 }, (e, i) => i * 100), key);
if (new.target) {
print('ctor');
}
return item2.prop;
}
print(f(0x10));
return (String.raw`a${new WeakMap()}b` ? ((p, q = /[0-9]+/g) => p + q)('str'[m]) : JSON.stringify(void (true)));
}
print(run5(2));
++item2;
