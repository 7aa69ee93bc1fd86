try {
print(null);
throw new RangeError('');
} catch (ex) {
print(ex.message);
} finally {
function compute0() {
;
;
if (new.target) {
print('ctor');
}
return [];
}
print(compute0());
}
;
print(0);
print(/[0-9]+/g);
