var total = 0;
for (var i = 0; i < 10; i++) {
  if (i % 2 === 0) {
    total += i * 3;
  } else {
    total -= 1;
  }
}
print(total, "done");
