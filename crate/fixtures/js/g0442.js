;
;
eval("var ev = 3; ev * 2");
String(Math.floor(((p, q = /[0-9]+/g) => p + q)(100), String.raw`a${undefined}b`));
;
