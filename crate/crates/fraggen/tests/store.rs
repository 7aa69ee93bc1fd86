//! Store files written by `ingest` read back unchanged.

use fraggen::ingest::{build_corpus, write_store, IngestReport};
use fraggen::store::{self, Store};
use fraggen_core::normalize::{normalize, BuiltinRegistry};
use fraggen_testkit::random_program;

fn seeds(n: u64) -> Vec<(String, fraggen_core::AstNode)> {
    let b = BuiltinRegistry::default();
    (0..n).map(|i| (format!("p{i:03}"), normalize(&random_program(i, 80), &b).0)).collect()
}

#[test]
fn store_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let mut s = seeds(30);
    let mut report = IngestReport::default();
    let corpus = build_corpus(&mut s, &mut report, 2).unwrap();
    write_store(dir.path(), &s, &corpus).unwrap();

    let loaded = Store::load(dir.path()).unwrap();
    assert_eq!(loaded.vocab, corpus.vocab);
    assert_eq!(loaded.sequences, corpus.sequences);
    assert_eq!(loaded.seeds, s);
    assert_eq!(store::read_markov(&dir.path().join(store::MARKOV_FILE)).unwrap(), corpus.markov);
    assert_eq!(report.kept, 30);
    assert_eq!(report.vocab_size, corpus.vocab.len());
    assert_eq!(corpus.sequences.iter().map(|e| e.source.as_str()).collect::<Vec<_>>(),
        s.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>());
}

#[test]
fn vocab_hash_identifies_the_vocabulary() {
    let mut a = seeds(10);
    let mut b = seeds(11);
    let mut r = IngestReport::default();
    let va = build_corpus(&mut a, &mut r, 1).unwrap().vocab;
    let va2 = build_corpus(&mut seeds(10), &mut r, 1).unwrap().vocab;
    let vb = build_corpus(&mut b, &mut r, 1).unwrap().vocab;
    assert_eq!(store::vocab_hash(&va), store::vocab_hash(&va2));
    assert_ne!(store::vocab_hash(&va), store::vocab_hash(&vb));
    assert_eq!(store::vocab_hash(&va).len(), 64);
}

#[test]
fn sequences_with_foreign_ids_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut s = seeds(5);
    let mut r = IngestReport::default();
    let corpus = build_corpus(&mut s, &mut r, 1).unwrap();
    let mut seqs = corpus.sequences.clone();
    seqs[0].ids[1] = fraggen_core::FragmentId(corpus.vocab.len() as u32 + 7);
    let path = dir.path().join(store::SEQUENCES_FILE);
    store::write_sequences(&path, &seqs).unwrap();
    assert!(store::read_sequences(&path, &corpus.vocab).is_err());
}

#[test]
fn missing_store_reports_the_path() {
    let err = Store::load(std::path::Path::new("/nonexistent/store")).unwrap_err();
    assert!(err.to_string().contains("/nonexistent/store"), "{err}");
}
