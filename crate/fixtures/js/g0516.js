print(typeof ([String.raw`a${null}b`, ('\n' ? '\n' : 100), '' & 'hello']));
try {
;
} catch (ex) {
print(ex.message);
} finally {
;
}
print(new Set(), JSON.stringify(Math.sqrt(`t8 ${undefined} end`, Array.from({ length: 1 }, (e, i) => i * 0x10))));
;
