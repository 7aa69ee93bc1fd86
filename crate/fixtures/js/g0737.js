;
const arr = JSON.stringify(+(new Set()));
;
var res = [...[-((null) && (/x/i)), String(-1)]];
try {
print([Math.max(res.p1, ('\n') || (0)), res]);
res.value;
} catch (ex2) {
print(ex2.message);
} finally {
print(JSON.stringify(Array.from({ length: 0 }, (e, i) => i * 3)), { value0: ([...[res, false]] ? res + 0x10 : (undefined ? /ab+c/ : null)), x1: res, length2: Math.min((arr, /x/i), `t5 ${/[0-9]+/g} end`) });
}
