for (let j0 = 0; j0 < 4; j0++) {
j0 = (({ next0: undefined } ? j0 : new Array(0)) ? (new WeakMap()) ?? (j0) : '');
var w = 0;
do {
w += 1;
} while (w < 4);
}
;
var y = { y, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['hello']: 1, ...{ q: 2 } };
var str6 = { y, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['\u0041']: 1, ...{ q: 2 } };
print(false, 'str'.y);
(null, String.raw`a${new Error(10)}b`);
var count = String.raw`a${'str'[new Error()]}b`;
y = str6;
