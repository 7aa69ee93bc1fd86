//! Corpus ingestion.

mod common;

use fraggen::ingest::{build_corpus, ingest_fixtures, ingest_sources, write_store, IngestOptions, IngestReport};
use fraggen::registry::bundled_builtins;
use fraggen::store::Store;
use fraggen_core::fragment::MAX_SEQUENCE_LEN;
use fraggen_core::print::print_program;

#[test]
fn fixtures_are_normalized_and_counted() {
    let b = bundled_builtins("node").unwrap();
    let (seeds, report) = ingest_fixtures(&common::fixtures().join("ast"), &b, None, &IngestOptions::default()).unwrap();
    assert_eq!(report.files, seeds.len() + report.too_large + report.rejected.len());
    assert!(seeds.len() >= 1000);
    assert!(report.rejected.is_empty(), "{:?}", report.rejected);
    for (name, ast) in &seeds {
        let (again, _) = fraggen_core::normalize::normalize(ast, &b);
        assert_eq!(&again, ast, "{name} is not normalized");
    }
}

#[test]
fn oversized_files_are_skipped() {
    let b = bundled_builtins("node").unwrap();
    let dir = common::fixtures().join("toy/ast");
    let all = ingest_fixtures(&dir, &b, None, &IngestOptions::default()).unwrap();
    // The smallest printed toy program decides the cut.
    let sizes: Vec<usize> = all.0.iter().map(|(_, a)| print_program(a).unwrap().len()).collect();
    let cut = *sizes.iter().min().unwrap();
    let opts = IngestOptions { max_file_size: cut, ..IngestOptions::default() };
    let (seeds, report) = ingest_fixtures(&dir, &b, None, &opts).unwrap();
    assert!(report.too_large > 0);
    assert_eq!(seeds.len() + report.too_large, report.files);
}

#[test]
fn unsupported_fixtures_are_rejected_with_a_reason() {
    let b = bundled_builtins("node").unwrap();
    let (seeds, report) =
        ingest_fixtures(&common::fixtures().join("unsupported/ast"), &b, None, &IngestOptions::default()).unwrap();
    assert!(seeds.is_empty());
    assert_eq!(report.rejected.len(), report.files);
    assert!(report.rejected.iter().all(|(_, why)| !why.is_empty()));
}

#[test]
fn over_long_sequences_are_dropped() {
    use fraggen_core::ast::build;
    let long = build::program((0..MAX_SEQUENCE_LEN).map(|i| build::expr_stmt(build::binary("+", build::num(i as f64), build::num(1.0)))).collect());
    let short = build::program(vec![build::expr_stmt(build::call(build::ident("print"), vec![build::num(1.0)]))]);
    let mut seeds = vec![("long".to_string(), long), ("short".to_string(), short)];
    let mut report = IngestReport::default();
    let corpus = build_corpus(&mut seeds, &mut report, 1).unwrap();
    assert_eq!(report.too_long, 1);
    assert_eq!(report.kept, 1);
    assert_eq!(seeds[0].0, "short");
    assert_eq!(corpus.sequences.len(), 1);
}

#[test]
fn sources_go_through_the_adapter_with_eval_inlined() {
    let Some(adapter) = common::acorn_adapter() else { return };
    let src = tempfile::tempdir().unwrap();
    std::fs::write(src.path().join("a.js"), "var total = 0;\neval(\"total += 2; print(total);\");\n").unwrap();
    std::fs::write(src.path().join("b.js"), "var = ;\n").unwrap();
    std::fs::write(src.path().join("c.js"), format!("var s = \"{}\";\n", "x".repeat(100))).unwrap();
    let b = bundled_builtins("node").unwrap();
    let opts = IngestOptions { max_file_size: 80, ..IngestOptions::default() };
    let (seeds, report) = ingest_sources(src.path(), &b, &adapter, &opts).unwrap();
    assert_eq!((report.files, report.too_large, report.rejected.len()), (3, 1, 1));
    assert!(report.rejected[0].1.contains("syntax"), "{:?}", report.rejected);
    assert_eq!(seeds.len(), 1);
    let printed = print_program(&seeds[0].1).unwrap();
    assert!(!printed.contains("eval"), "{printed}");
    assert_eq!(printed, "var v0 = 0;\n{\n  v0 += 2;\n  print(v0);\n}");

    let out = tempfile::tempdir().unwrap();
    let mut seeds = seeds;
    let mut report = report;
    let corpus = build_corpus(&mut seeds, &mut report, 1).unwrap();
    write_store(out.path(), &seeds, &corpus).unwrap();
    assert_eq!(Store::load(out.path()).unwrap().seeds, seeds);
}
