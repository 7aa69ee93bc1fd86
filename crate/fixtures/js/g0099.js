print(new Object(), false);
print(false);
print(NaN);
switch ([1, 2, 3].value) {
case "x":
print("x");
break;
case null:
case /[0-9]+/g:
eval("1 + 2");
default:
print(String((String(null)) && (Object.keys([1, 2]))));
}
print(/x/i);
