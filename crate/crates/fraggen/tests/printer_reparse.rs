//! Printed programs parse back to the tree they came from, checked with an
//! independent parser (acorn).

mod common;

use fraggen::estree;
use fraggen_core::print::print_program;
use fraggen_testkit::{random_program, strip_raw};

#[test]
fn random_programs_reparse_to_the_same_tree() {
    let Some(adapter) = common::acorn_adapter() else { return };
    let mut failures = Vec::new();
    for seed in 0..3000u64 {
        let ast = random_program(seed, 10 + (seed as usize % 120));
        let src = print_program(&ast).unwrap();
        match adapter.parse(&src) {
            Ok(back) if strip_raw(&back) == strip_raw(&ast) => {}
            Ok(back) => failures.push(format!(
                "seed {seed}: tree differs\n{src}\n--- reprinted\n{}",
                print_program(&back).unwrap()
            )),
            Err(e) => failures.push(format!("seed {seed}: {e}\n{src}")),
        }
    }
    assert!(failures.is_empty(), "{} failures, first:\n{}", failures.len(), failures[0]);
}

#[test]
fn fixture_sources_reprint_to_the_same_tree() {
    let Some(adapter) = common::acorn_adapter() else { return };
    let dir = common::fixtures().join("ast");
    let mut n = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let ast = estree::decode_ast(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let src = print_program(&ast).unwrap();
        let back = adapter.parse(&src).unwrap_or_else(|e| panic!("{}: {e}\n{src}", path.display()));
        assert_eq!(back, ast, "{}", path.display());
        n += 1;
    }
    assert!(n >= 1000);
}
