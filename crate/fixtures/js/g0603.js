;
;
print('\u0041');
;
print(new Object(), (function (u) {
return u;
})(Array.from({ length: 2 }, (e, i) => i * 0x10)));
String.raw`a${(function (u) {
return u;
})(3)}b`;
