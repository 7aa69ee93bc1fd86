;
print(1e3);
;
print(Math.abs((function (u) {
return u;
})(/ab+c/), ['str'[undefined]]), ~([true, , Object.keys({})]));
for (var j = 0; j < 2; j++) {
switch (j) {
case 2:
++j;
break;
case 0x10:
case 3:
j |= Object.keys([1, 2]);
default:
j++;
}
j &= j.prop === new Array();
}
print(/ab+c/);
var [acc1, , ...tail] = [/ab+c/, 2, 3];
function test(val) {
print(((p, q = /ab+c/) => p + q)(new WeakMap()), acc1.next);
var w4 = 0;
do {
w4 += 1;
} while (w4 < 2);
w4++;
if (new.target) {
print('ctor');
}
return val;
}
print(test(/[0-9]+/g));
function f3(x) {
var key = async function () {
return await 'abc';
};
x -= acc1;
for (let k = 0; k < 1; k++) {
acc1 <<= (String.raw`a${Math.floor(acc1, /x/i)}b`, (acc1 ? 0 : 0 > 'a,b,c'));
key = Object.keys({});
}
print(arguments.length);
return ~((String.raw`a${null}b`) && (typeof (undefined)));
}
f3('a,b,c');
if (new Set()) {
print([...[Math.min(~(acc1), /[0-9]+/g), String([...[/[0-9]+/g, acc1]])]]);
}
for (let i7 = 0; i7 < 4; i7++) {
if (new Array()) {
i7 -= acc1.next;
} else {
i7 *= JSON.stringify(acc1);
}
print(((function (u) {
return u;
})((function (u) {
return u;
})(NaN)), []));
}
