//! Test generation shared by `generate` and fuzzing campaigns: mutate a
//! seed, optionally resolve references, print.
//!
//! Test `i` draws from its own ChaCha8 stream, so a test stream does not
//! depend on how tests are spread over workers.

use std::path::Path;

use fraggen_core::generate::{mutate_ast, GenerationParams, MutationFailure};
use fraggen_core::nnlm::Model;
use fraggen_core::normalize::BuiltinRegistry;
use fraggen_core::print::print_program;
use fraggen_core::resolve::{resolve_references, UsageHints};
use fraggen_core::suggest::{LstmSuggester, MarkovModel, MarkovSuggester, RandomSuggester, Suggester};
use fraggen_core::{AstNode, Vocabulary};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checkpoint;
use crate::error::{Error, Result};
use crate::store;

/// Mutation attempts per test before the slot is given up.
pub const MAX_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SuggesterKind {
    #[default]
    Lstm,
    Markov,
    Random,
}

impl std::str::FromStr for SuggesterKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lstm" => Ok(SuggesterKind::Lstm),
            "markov" => Ok(SuggesterKind::Markov),
            "random" => Ok(SuggesterKind::Random),
            _ => Err(format!("unknown suggester `{s}` (expected lstm, markov or random)")),
        }
    }
}

/// Owns whatever a suggester borrows.
pub enum LoadedSuggester {
    Lstm(Box<Model<f32>>),
    Markov(MarkovModel),
    Random(usize),
}

impl LoadedSuggester {
    /// Loads the model for `kind` from a store directory. The LSTM needs a
    /// checkpoint trained on the store's vocabulary.
    pub fn load(kind: SuggesterKind, store_dir: &Path, vocab: &Vocabulary, ckpt: Option<&Path>) -> Result<Self> {
        Ok(match kind {
            SuggesterKind::Lstm => {
                let path = ckpt.ok_or_else(|| Error::Format("the lstm suggester needs a checkpoint".into()))?;
                LoadedSuggester::Lstm(Box::new(checkpoint::load(path, Some(&store::vocab_hash(vocab)))?))
            }
            SuggesterKind::Markov => LoadedSuggester::Markov(store::read_markov(&store_dir.join(store::MARKOV_FILE))?),
            SuggesterKind::Random => LoadedSuggester::Random(vocab.len()),
        })
    }

    pub fn suggester(&self) -> Box<dyn Suggester + '_> {
        match self {
            LoadedSuggester::Lstm(m) => Box::new(LstmSuggester { model: m }),
            LoadedSuggester::Markov(m) => Box::new(MarkovSuggester { model: m }),
            LoadedSuggester::Random(n) => Box::new(RandomSuggester { vocab_size: *n }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedTest {
    pub index: u64,
    pub source: String,
    pub ast: AstNode,
    /// Index of the mutated seed.
    pub seed: usize,
    pub attempts: usize,
    pub replacements: usize,
}

pub struct Generator<'a> {
    pub seeds: &'a [AstNode],
    pub vocab: &'a Vocabulary,
    pub suggester: &'a dyn Suggester,
    pub params: GenerationParams,
    /// Reference resolution, when enabled.
    pub resolve: Option<(&'a BuiltinRegistry, &'a UsageHints)>,
    pub rng_seed: u64,
}

impl Generator<'_> {
    pub fn rng_for(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.rng_seed);
        rng.set_stream(index);
        rng
    }

    /// Test number `index`, or the failure of its last attempt.
    pub fn generate(&self, index: u64) -> std::result::Result<GeneratedTest, MutationFailure> {
        let mut rng = self.rng_for(index);
        let mut last = MutationFailure::UnusableSeed;
        for attempt in 1..=MAX_ATTEMPTS {
            let m = match mutate_ast(self.seeds, self.vocab, self.suggester, &self.params, &mut rng) {
                Ok(m) => m,
                Err(e) => {
                    last = e;
                    continue;
                }
            };
            let (ast, replacements) = match self.resolve {
                Some((builtins, hints)) => {
                    let (ast, r) = resolve_references(&m.ast, builtins, hints, &mut rng);
                    (ast, r.len())
                }
                None => (m.ast, 0),
            };
            let Ok(mut source) = print_program(&ast) else { continue };
            source.push('\n');
            return Ok(GeneratedTest { index, source, ast, seed: m.seed, attempts: attempt, replacements });
        }
        Err(last)
    }
}
