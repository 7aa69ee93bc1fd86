//! Next-fragment suggestion strategies: the LSTM model, an order-2 Markov
//! chain, and uniform random choice.
//!
//! A suggester hands out sessions. The caller pushes the context ids one by
//! one (BOS first) and asks for up to `k` suggestions at any point, so the
//! LSTM never re-reads the whole prefix.

use alloc::{boxed::Box, collections::BTreeMap, vec::Vec};

use rand::RngCore;

use crate::ast::NodeKind;
use crate::fragment::{EncodedSequence, FragmentId, Vocabulary, RESERVED_IDS};
use crate::nnlm::{LstmState, Model};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Suggestion {
    pub id: FragmentId,
    pub score: f64,
}

pub trait Suggester: Sync {
    fn begin(&self) -> Box<dyn SuggestSession + '_>;
}

pub trait SuggestSession {
    fn push(&mut self, id: FragmentId);
    /// At most `k` non-reserved ids, best first.
    fn suggest(&mut self, required_type: NodeKind, parent: FragmentId, k: usize, rng: &mut dyn RngCore)
        -> Vec<Suggestion>;
}

/// One-shot query: pushes `context` into a fresh session and asks once.
pub fn suggest(
    strategy: &dyn Suggester,
    context: &[FragmentId],
    required_type: NodeKind,
    parent: FragmentId,
    k: usize,
    rng: &mut dyn RngCore,
) -> Vec<Suggestion> {
    let mut session = strategy.begin();
    for &id in context {
        session.push(id);
    }
    session.suggest(required_type, parent, k, rng)
}

fn top_k(mut scored: Vec<Suggestion>, k: usize) -> Vec<Suggestion> {
    scored.sort_by(|a, b| b.score.partial_cmp(&a.score).unwrap_or(core::cmp::Ordering::Equal).then(a.id.cmp(&b.id)));
    scored.truncate(k);
    scored
}

/// Top-k of the model's distribution, reserved ids masked out. Type
/// filtering is left to the caller.
pub struct LstmSuggester<'m> {
    pub model: &'m Model<f32>,
}

struct LstmSession<'m> {
    model: &'m Model<f32>,
    state: LstmState<f32>,
}

impl Suggester for LstmSuggester<'_> {
    fn begin(&self) -> Box<dyn SuggestSession + '_> {
        Box::new(LstmSession { model: self.model, state: self.model.initial_state() })
    }
}

impl SuggestSession for LstmSession<'_> {
    fn push(&mut self, id: FragmentId) {
        // Out-of-range ids cannot come from a matching vocabulary; feed BOS
        // instead of failing mid-generation.
        if self.model.step(&mut self.state, id).is_err() {
            let _ = self.model.step(&mut self.state, FragmentId::BOS);
        }
    }

    fn suggest(&mut self, required_type: NodeKind, parent: FragmentId, k: usize, _: &mut dyn RngCore) -> Vec<Suggestion> {
        let Ok(p) = self.model.predict(&self.state, required_type, parent) else { return Vec::new() };
        let scored = p
            .iter()
            .enumerate()
            .skip(RESERVED_IDS)
            .map(|(i, v)| Suggestion { id: FragmentId(i as u32), score: f64::from(*v) })
            .collect();
        top_k(scored, k)
    }
}

/// Continuation counts keyed by the preceding zero, one or two ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MarkovModel {
    pub counts: BTreeMap<Vec<u32>, BTreeMap<u32, u64>>,
}

impl MarkovModel {
    pub const ORDER: usize = 2;

    pub fn train(seqs: &[EncodedSequence]) -> Self {
        let mut m = MarkovModel::default();
        for s in seqs {
            let ids: Vec<u32> = s.ids.iter().map(|i| i.0).collect();
            for t in 1..ids.len() {
                for order in 0..=Self::ORDER.min(t) {
                    let ctx = ids[t - order..t].to_vec();
                    *m.counts.entry(ctx).or_default().entry(ids[t]).or_default() += 1;
                }
            }
        }
        m
    }

    /// Continuation distribution after `context`, backing off from the last
    /// two ids to the last one to none whenever a context is unseen or has
    /// only reserved continuations.
    pub fn distribution(&self, context: &[FragmentId]) -> Vec<Suggestion> {
        for order in (0..=Self::ORDER.min(context.len())).rev() {
            let key: Vec<u32> = context[context.len() - order..].iter().map(|i| i.0).collect();
            let Some(next) = self.counts.get(&key) else { continue };
            let kept: Vec<(u32, u64)> =
                next.iter().filter(|(id, _)| **id as usize >= RESERVED_IDS).map(|(a, b)| (*a, *b)).collect();
            let total: u64 = kept.iter().map(|(_, n)| n).sum();
            if total == 0 {
                continue;
            }
            return kept
                .into_iter()
                .map(|(id, n)| Suggestion { id: FragmentId(id), score: n as f64 / total as f64 })
                .collect();
        }
        Vec::new()
    }
}

pub struct MarkovSuggester<'m> {
    pub model: &'m MarkovModel,
}

struct MarkovSession<'m> {
    model: &'m MarkovModel,
    context: Vec<FragmentId>,
}

impl Suggester for MarkovSuggester<'_> {
    fn begin(&self) -> Box<dyn SuggestSession + '_> {
        Box::new(MarkovSession { model: self.model, context: Vec::new() })
    }
}

impl SuggestSession for MarkovSession<'_> {
    fn push(&mut self, id: FragmentId) {
        self.context.push(id);
    }

    fn suggest(&mut self, _: NodeKind, _: FragmentId, k: usize, _: &mut dyn RngCore) -> Vec<Suggestion> {
        top_k(self.model.distribution(&self.context), k)
    }
}

/// `k` distinct non-reserved ids chosen uniformly.
pub struct RandomSuggester {
    pub vocab_size: usize,
}

impl RandomSuggester {
    pub fn new(vocab: &Vocabulary) -> Self {
        RandomSuggester { vocab_size: vocab.len() }
    }
}

struct RandomSession {
    vocab_size: usize,
}

impl Suggester for RandomSuggester {
    fn begin(&self) -> Box<dyn SuggestSession + '_> {
        Box::new(RandomSession { vocab_size: self.vocab_size })
    }
}

impl SuggestSession for RandomSession {
    fn push(&mut self, _: FragmentId) {}

    fn suggest(&mut self, _: NodeKind, _: FragmentId, k: usize, rng: &mut dyn RngCore) -> Vec<Suggestion> {
        let n = self.vocab_size.saturating_sub(RESERVED_IDS);
        if n == 0 {
            return Vec::new();
        }
        let score = 1.0 / n as f64;
        rand::seq::index::sample(rng, n, k.min(n))
            .into_iter()
            .map(|i| Suggestion { id: FragmentId((RESERVED_IDS + i) as u32), score })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nnlm::{init_model, Hyperparams};
    use crate::test_corpus::toy_corpus;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn seq(ids: &[u32]) -> EncodedSequence {
        let mut all = vec![FragmentId::BOS];
        all.extend(ids.iter().map(|i| FragmentId(*i)));
        EncodedSequence { source: "t".into(), parent_pos: vec![0; all.len()], ids: all }
    }

    #[test]
    fn markov_counts_bigram_continuations() {
        let (a, b, c, d) = (100, 101, 102, 103);
        let m = MarkovModel::train(&[seq(&[a, b, c]), seq(&[a, b, d])]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let ctx = [FragmentId::BOS, FragmentId(a), FragmentId(b)];
        let got = suggest(&MarkovSuggester { model: &m }, &ctx, NodeKind::Identifier, FragmentId::BOS, 2, &mut rng);
        assert_eq!(got, vec![Suggestion { id: FragmentId(c), score: 0.5 }, Suggestion { id: FragmentId(d), score: 0.5 }]);
    }

    #[test]
    fn markov_backs_off() {
        let (a, b, c, d) = (100, 101, 102, 103);
        let m = MarkovModel::train(&[seq(&[a, b, c]), seq(&[d, b, d])]);
        // (c, b) unseen, so fall back to continuations of b.
        let dist = m.distribution(&[FragmentId(c), FragmentId(b)]);
        assert_eq!(dist.len(), 2);
        // Unseen everywhere: unigram.
        let dist = m.distribution(&[FragmentId(999)]);
        let total: f64 = dist.iter().map(|s| s.score).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(dist.len(), 4);
    }

    #[test]
    fn random_is_clamped_and_reproducible() {
        let r = RandomSuggester { vocab_size: RESERVED_IDS + 10 };
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let got = suggest(&r, &[FragmentId::BOS], NodeKind::Identifier, FragmentId::BOS, 64, &mut rng);
        assert_eq!(got.len(), 10);
        assert!(got.iter().all(|s| s.id.index() >= RESERVED_IDS));
        let mut ids: Vec<_> = got.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 10);
        let mut rng2 = ChaCha8Rng::seed_from_u64(9);
        assert_eq!(got, suggest(&r, &[FragmentId::BOS], NodeKind::Identifier, FragmentId::BOS, 64, &mut rng2));
    }

    #[test]
    fn lstm_never_suggests_reserved_ids() {
        let (vocab, seqs) = toy_corpus();
        let model = init_model(&Hyperparams { rng_seed: 5, ..Hyperparams::default() }, &vocab).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let s = &seqs[0];
        let got = suggest(&LstmSuggester { model: &model }, &s.ids[..2], NodeKind::Identifier, s.ids[1], 1000, &mut rng);
        assert_eq!(got.len(), vocab.len() - RESERVED_IDS);
        assert!(got.iter().all(|x| !vocab.is_reserved(x.id)));
        assert!(got.windows(2).all(|w| w[0].score >= w[1].score));
    }
}
