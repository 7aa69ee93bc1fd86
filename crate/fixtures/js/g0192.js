;
print(`t7 ${String((function (u) {
return u;
})(/[0-9]+/g))} end`, String(JSON.stringify(String("x"))));
({ y0: [], next1: (String(/ab+c/) ? [false, , undefined] : 'str'[/[0-9]+/g]) });
;
;
;
