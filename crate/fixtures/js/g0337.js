var obj6 = (u, v = "x") => u + v;
++obj6;
obj6 = Object.keys({ a: 1 });
var count3 = function (...u) {
return u.length;
};
