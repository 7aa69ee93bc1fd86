{
;
print(!(~(('\u0041' ? /x/i : undefined))));
}
for (let i = 0; i < 3; i++) {
{
;
}
function g() {
;
i = Math.round(new Error(), i) >> (new Map()) ?? ([...[i, i]]);
return String.raw`a${{ prop0: (function (u) {
return u;
})(i) }}b`;
}
print(g());
}
{
{
let m = new Error();
for (let i1 = 0; i1 < 3; i1++) {
void ([i1, , 255] + m != /[0-9]+/g);
var flag7 = new Error();
}
}
print(null);
}
for (let p3 of [1, 2, 3]) {
p3--;
}
;
eval("[1, 2].length");
