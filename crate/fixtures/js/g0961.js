var count = u => {
return u;
};
count <<= count;
count -= (new Map() ? count[true] : ([] ? true < /x/i : new Set()));
var [tmp8, , ...tail3] = [null, 2, 3];
