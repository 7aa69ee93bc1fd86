;
var z = { z, get g() {
return 1;
}, set s(w) {}, m() {
return this;
}, ['abc']: 1, ...{ q: 2 } };
for (const p9 in { a: 1, b: 2 }) {
var { value: n = undefined, ...tail5 } = { x: 1 };
}
z *= String.raw`a${Math.round(z, ~(z))}b`;
++z;
const str2 = Math.sqrt(z[1 % z], []);
