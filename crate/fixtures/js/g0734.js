print(2);
function make() {
let res8 = (String.raw`a${{ length0: 'abc' }}b`) && (((1, '0')) || ([0.5, , Infinity]));
res8--;
if (new.target) {
print('ctor');
}
return JSON.stringify(3);
}
make();
for (let k0 = 0; k0 < 3; k0++) {
if (((Object.keys({ a: 1 })) && (k0)) && ((String(/ab+c/) ? String(k0) : new Set()))) {
;
}
print(Math.max(make(('abc' ? k0 : '\n')), k0['\n']), (k0, (function (u) {
return u;
})(k0.x)));
}
;
new WeakMap();
;
print(Infinity);
;
