with (Math) {
  print(PI);
}
