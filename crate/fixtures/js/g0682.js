for (let k of []) {
;
}
if (String([...['str'.prop, (function (u) {
return u;
})(/x/i)]])) {
class C9 {
constructor(x) {
this.x = x;
}
get value() {
return this.x;
}
static make() {
return new C9(false);
}
m1(a) {
return a + this.x;
}
}
print(C9.make().value);
} else {
true;
print([...[[1, 2, 3].p0, /x/i]], (({ x: 1, length: 2 }).y, `t8 ${(/ab+c/) || (true)} end`));
}
eval("print('e')");
{
if (JSON.stringify([false, , Object.keys({})])) {
new Date();
;
}
;
}
eval("1 + 2");
for (const p of 'ab') {
for (var j2 = 0; j2 < 4; j2++) {
0.5;
try {
print(String(p[/x/i << p]));
j2 |= String.raw`a${undefined}b`;
} catch (ex) {
print(ex);
}
}
}
