var { value: z7 = 'abc', ...rest2 } = { x: 1 };
for (var k8 of []) {
null >>> [Object.keys({ a: 1 }), , Math.abs(z7, -1)];
}
[({ x: 1, length: 2 }).p1, , (function (u) {
return u;
})((true ? '\n' : z7))];
for (let k = 0; k < 4; k++) {
z7--;
z7 = k;
}
var w = 2;
while (w > 0) {
w--;
var w21 = 0;
do {
w21 += 1;
} while (w21 < 1);
}
{
try {
switch (new Object()) {
case "x":
eval("print('e')");
break;
case 1e3:
case undefined:
--z7;
default:
w -= w;
}
if (z7) {
;
print(w);
}
} catch (err8) {
print(err8.message);
}
function g() {
w = w.x;
z7--;
return ("x" ? ((w ? '\n' : '')) && ((function (u) {
return u;
})('\u0041')) : undefined);
}
print(g());
}
print(`t1 ${void (w)} end` === (Math.floor(z7, 0), Array.from({ length: 1 }, (e, i) => i * NaN)));
for (var i = 0; i < 3; i++) {
for (let k2 in { a: 1, b: 2 }) {
i++;
}
var m = function (...u) {
return u.length;
};
}
