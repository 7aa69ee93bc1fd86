;
print('a,b,c', null);
function make4(a) {
for (let p7 in [1, 2]) {
a--;
}
if (new.target) {
print('ctor');
}
return [((p, q = /ab+c/) => p + q)((a) || ('a,b,c')), , { y0: 'hello' }];
}
print(make4('hello'));
;
