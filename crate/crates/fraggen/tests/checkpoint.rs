//! Checkpoint files.

use fraggen::checkpoint::{decode, encode, load, save};
use fraggen::ingest::{build_corpus, IngestReport};
use fraggen::store::vocab_hash;
use fraggen::Error;
use fraggen_core::nnlm::{init_model, train_epoch, Hyperparams, Model};
use fraggen_core::normalize::{normalize, BuiltinRegistry};
use fraggen_core::Vocabulary;
use fraggen_testkit::random_program;
use proptest::prelude::*;

fn trained() -> (Model<f32>, Vocabulary) {
    let b = BuiltinRegistry::default();
    let mut seeds: Vec<_> = (0..6).map(|i| (format!("p{i}"), normalize(&random_program(i, 40), &b).0)).collect();
    let corpus = build_corpus(&mut seeds, &mut IngestReport::default(), 1).unwrap();
    let hp = Hyperparams { embed_dim: 8, hidden_dim: 6, type_embed_dim: 3, batch_size: 2, rng_seed: 3, ..Hyperparams::default() };
    let mut model = init_model(&hp, &corpus.vocab).unwrap();
    for _ in 0..2 {
        train_epoch(&mut model, &corpus.vocab, &corpus.sequences, &hp).unwrap();
    }
    (model, corpus.vocab)
}

#[test]
fn round_trip_is_bit_identical() {
    let (model, vocab) = trained();
    let hash = vocab_hash(&vocab);
    let bytes = encode(&model, &hash).unwrap();
    let back = decode(&bytes, Some(&hash)).unwrap();
    assert_eq!(back.hp, model.hp);
    assert_eq!(back.epochs_trained, 2);
    for (a, b) in back.params.tensors().iter().zip(model.params.tensors()) {
        assert!(a.data.iter().zip(&b.data).all(|(x, y)| x.to_bits() == y.to_bits()));
    }
    for (a, b) in back.momentum.tensors().iter().zip(model.momentum.tensors()) {
        assert!(a.data.iter().zip(&b.data).all(|(x, y)| x.to_bits() == y.to_bits()));
    }
    assert_eq!(encode(&back, &hash).unwrap(), bytes);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.ckpt");
    save(&path, &model, &hash).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
    assert_eq!(load(&path, None).unwrap(), back);
}

#[test]
fn other_vocabulary_is_refused() {
    let (model, vocab) = trained();
    let bytes = encode(&model, &vocab_hash(&vocab)).unwrap();
    assert!(matches!(decode(&bytes, Some("00")), Err(Error::VocabMismatch)));
    assert!(decode(&bytes, None).is_ok());
}

#[test]
fn empty_and_foreign_files_fail_the_checksum() {
    assert!(matches!(decode(&[], None), Err(Error::ChecksumError)));
    assert!(matches!(decode(b"not a checkpoint at all", None), Err(Error::ChecksumError)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn truncation_fails_the_checksum(cut in any::<prop::sample::Index>()) {
        let (model, vocab) = trained();
        let bytes = encode(&model, &vocab_hash(&vocab)).unwrap();
        let len = cut.index(bytes.len());
        prop_assert!(matches!(decode(&bytes[..len], None), Err(Error::ChecksumError)));
    }

    #[test]
    fn any_flipped_bit_fails_the_checksum(at in any::<prop::sample::Index>(), bit in 0u8..8) {
        let (model, vocab) = trained();
        let mut bytes = encode(&model, &vocab_hash(&vocab)).unwrap();
        let i = at.index(bytes.len());
        bytes[i] ^= 1 << bit;
        prop_assert!(matches!(decode(&bytes, None), Err(Error::ChecksumError)));
    }
}
