function tag(strings, ...values) {
  return strings.raw.join("|") + values.join("+");
}
var who = "world";
var plain = `hello ${who}, ${1 + 2} times\n`;
var tagged = tag`a${who}b${42}c`;
var nested = `outer ${`inner ${who}`}`;
var re = /(\d+)-(\w+)/g;
var m = "12-ab 34-cd".replace(re, "$2$1");
print(plain, tagged, nested, m, /^x$/i.test("X"));
