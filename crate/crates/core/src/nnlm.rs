//! LSTM language model over fragment ids.
//!
//! One projection (fragment embedding), one LSTM layer, and an output layer
//! fed with the hidden state, an embedding of the next fragment's kind and
//! the embedding of its parent fragment. Training minimizes cross entropy
//! plus a type-error term measuring how much probability mass the top
//! predictions place outside the true fragment's kind.

use alloc::{vec, vec::Vec};

use num_traits::Float;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ast::NodeKind;
use crate::error::Error;
use crate::fragment::{EncodedSequence, FragmentId, Vocabulary};

/// Probabilities are floored at this value inside the log of `l1`.
pub const PROB_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Hyperparams {
    pub embed_dim: usize,
    pub hidden_dim: usize,
    pub type_embed_dim: usize,
    pub learning_rate: f64,
    /// Per-epoch multiplicative learning-rate decay.
    pub lr_decay: f64,
    pub momentum: f64,
    pub l2_penalty: f64,
    pub batch_size: usize,
    pub bptt_cap: usize,
    pub grad_clip_norm: f64,
    pub epochs: usize,
    pub rng_seed: u64,
}

impl Default for Hyperparams {
    fn default() -> Self {
        Hyperparams {
            embed_dim: 32,
            hidden_dim: 32,
            type_embed_dim: 8,
            learning_rate: 0.1,
            lr_decay: 0.95,
            momentum: 0.9,
            l2_penalty: 1e-4,
            batch_size: 32,
            bptt_cap: 256,
            grad_clip_norm: 5.0,
            epochs: 30,
            rng_seed: 0,
        }
    }
}

impl Hyperparams {
    pub fn validate(&self) -> Result<(), Error> {
        if self.embed_dim == 0 || self.hidden_dim == 0 || self.type_embed_dim == 0 {
            return Err(Error::InvalidHyperparams("dimensions must be positive"));
        }
        if !(0.0..1.0).contains(&self.momentum) {
            return Err(Error::InvalidHyperparams("momentum must lie in [0, 1)"));
        }
        if self.batch_size == 0 || self.bptt_cap == 0 {
            return Err(Error::InvalidHyperparams("batch size and bptt cap must be positive"));
        }
        if !(self.learning_rate >= 0.0) || !(self.l2_penalty >= 0.0) || !(self.lr_decay > 0.0) {
            return Err(Error::InvalidHyperparams("learning rate, decay and penalty must be non-negative"));
        }
        if !(self.grad_clip_norm > 0.0) {
            return Err(Error::InvalidHyperparams("gradient clip norm must be positive"));
        }
        Ok(())
    }
}

/// Row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Float> Tensor<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Tensor { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [T] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn cast<U: Float>(&self) -> Tensor<U> {
        Tensor { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| U::from(*v).unwrap()).collect() }
    }
}

/// All weight tensors of the model.
#[derive(Debug, Clone, PartialEq)]
pub struct Params<T> {
    /// `|V| × D`, shared between input fragments and parent conditioning.
    pub embedding: Tensor<T>,
    /// `|kinds| × Dt`.
    pub type_embedding: Tensor<T>,
    /// `4H × D`, gate order input, forget, cell, output.
    pub w_input: Tensor<T>,
    /// `4H × H`.
    pub w_hidden: Tensor<T>,
    /// `1 × 4H`.
    pub b_gates: Tensor<T>,
    /// `|V| × (H + Dt + D)`.
    pub w_out: Tensor<T>,
    /// `1 × |V|`.
    pub b_out: Tensor<T>,
}

impl<T: Float> Params<T> {
    pub const NAMES: [&'static str; 7] =
        ["embedding", "type_embedding", "w_input", "w_hidden", "b_gates", "w_out", "b_out"];

    pub fn zeros(vocab: usize, hp: &Hyperparams) -> Self {
        let (d, h, dt) = (hp.embed_dim, hp.hidden_dim, hp.type_embed_dim);
        Params {
            embedding: Tensor::zeros(vocab, d),
            type_embedding: Tensor::zeros(NodeKind::COUNT, dt),
            w_input: Tensor::zeros(4 * h, d),
            w_hidden: Tensor::zeros(4 * h, h),
            b_gates: Tensor::zeros(1, 4 * h),
            w_out: Tensor::zeros(vocab, h + dt + d),
            b_out: Tensor::zeros(1, vocab),
        }
    }

    pub fn tensors(&self) -> [&Tensor<T>; 7] {
        [
            &self.embedding,
            &self.type_embedding,
            &self.w_input,
            &self.w_hidden,
            &self.b_gates,
            &self.w_out,
            &self.b_out,
        ]
    }

    pub fn tensors_mut(&mut self) -> [&mut Tensor<T>; 7] {
        [
            &mut self.embedding,
            &mut self.type_embedding,
            &mut self.w_input,
            &mut self.w_hidden,
            &mut self.b_gates,
            &mut self.w_out,
            &mut self.b_out,
        ]
    }

    pub fn cast<U: Float>(&self) -> Params<U> {
        Params {
            embedding: self.embedding.cast(),
            type_embedding: self.type_embedding.cast(),
            w_input: self.w_input.cast(),
            w_hidden: self.w_hidden.cast(),
            b_gates: self.b_gates.cast(),
            w_out: self.w_out.cast(),
            b_out: self.b_out.cast(),
        }
    }

    fn all_finite(&self) -> bool {
        self.tensors().iter().all(|t| t.data.iter().all(|v| v.is_finite()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Model<T> {
    pub hp: Hyperparams,
    pub params: Params<T>,
    /// Momentum buffers, one per weight.
    pub momentum: Params<T>,
    pub epochs_trained: u32,
}

/// Weights drawn uniformly from `[-0.05, 0.05]` with a generator seeded by
/// `hp.rng_seed`.
pub fn init_model(hp: &Hyperparams, vocab: &Vocabulary) -> Result<Model<f32>, Error> {
    hp.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(hp.rng_seed);
    let mut params = Params::<f32>::zeros(vocab.len(), hp);
    for t in params.tensors_mut() {
        for v in t.data.iter_mut() {
            *v = rng.gen_range(-0.05f32..=0.05);
        }
    }
    Ok(Model { hp: hp.clone(), momentum: Params::zeros(vocab.len(), hp), params, epochs_trained: 0 })
}

/// LSTM hidden and cell state.
#[derive(Debug, Clone, PartialEq)]
pub struct LstmState<T> {
    pub h: Vec<T>,
    pub c: Vec<T>,
}

fn sigmoid<T: Float>(x: T) -> T {
    T::one() / (T::one() + (-x).exp())
}

fn matvec_add<T: Float>(m: &Tensor<T>, x: &[T], out: &mut [T]) {
    for (r, o) in out.iter_mut().enumerate() {
        let row = m.row(r);
        let mut acc = T::zero();
        for (w, v) in row.iter().zip(x) {
            acc = acc + *w * *v;
        }
        *o = *o + acc;
    }
}

fn softmax_in_place<T: Float>(z: &mut [T]) {
    let max = z.iter().fold(T::neg_infinity(), |a, &b| a.max(b));
    let mut sum = T::zero();
    for v in z.iter_mut() {
        *v = (*v - max).exp();
        sum = sum + *v;
    }
    for v in z.iter_mut() {
        *v = *v / sum;
    }
}

/// Intermediate values of one LSTM step, kept for backpropagation.
struct StepCache<T> {
    input: usize,
    h_prev: Vec<T>,
    c_prev: Vec<T>,
    /// Activated gates `[i, f, g, o]`.
    gates: Vec<T>,
    tanh_c: Vec<T>,
}

impl<T: Float> Model<T> {
    pub fn vocab_size(&self) -> usize {
        self.params.embedding.rows
    }

    pub fn initial_state(&self) -> LstmState<T> {
        let h = self.hp.hidden_dim;
        LstmState { h: vec![T::zero(); h], c: vec![T::zero(); h] }
    }

    fn check_id(&self, id: FragmentId) -> Result<usize, Error> {
        let i = id.index();
        if i < self.vocab_size() {
            Ok(i)
        } else {
            Err(Error::VocabRangeError(id.0))
        }
    }

    /// Feeds one fragment id into the LSTM.
    pub fn step(&self, state: &mut LstmState<T>, id: FragmentId) -> Result<(), Error> {
        let i = self.check_id(id)?;
        self.step_cached(state, i);
        Ok(())
    }

    fn step_cached(&self, state: &mut LstmState<T>, input: usize) -> StepCache<T> {
        let h = self.hp.hidden_dim;
        let p = &self.params;
        let mut a = p.b_gates.data.clone();
        matvec_add(&p.w_input, p.embedding.row(input), &mut a);
        matvec_add(&p.w_hidden, &state.h, &mut a);
        for (k, v) in a.iter_mut().enumerate() {
            *v = if (2 * h..3 * h).contains(&k) { v.tanh() } else { sigmoid(*v) };
        }
        let h_prev = core::mem::take(&mut state.h);
        let c_prev = core::mem::take(&mut state.c);
        let mut c = vec![T::zero(); h];
        let mut tanh_c = vec![T::zero(); h];
        let mut hn = vec![T::zero(); h];
        for j in 0..h {
            c[j] = a[h + j] * c_prev[j] + a[j] * a[2 * h + j];
            tanh_c[j] = c[j].tanh();
            hn[j] = a[3 * h + j] * tanh_c[j];
        }
        state.h = hn;
        state.c = c;
        StepCache { input, h_prev, c_prev, gates: a, tanh_c }
    }

    fn output_input(&self, h: &[T], next_type: NodeKind, parent: usize) -> Vec<T> {
        let mut u = Vec::with_capacity(self.params.w_out.cols);
        u.extend_from_slice(h);
        u.extend_from_slice(self.params.type_embedding.row(next_type.index()));
        u.extend_from_slice(self.params.embedding.row(parent));
        u
    }

    fn logits(&self, u: &[T]) -> Vec<T> {
        let mut z = self.params.b_out.data.clone();
        matvec_add(&self.params.w_out, u, &mut z);
        z
    }

    /// Next-fragment distribution given the current state.
    pub fn predict(&self, state: &LstmState<T>, next_type: NodeKind, parent: FragmentId) -> Result<Vec<T>, Error> {
        let parent = self.check_id(parent)?;
        let mut z = self.logits(&self.output_input(&state.h, next_type, parent));
        softmax_in_place(&mut z);
        Ok(z)
    }
}

/// Distribution over the vocabulary for the fragment following `context`
/// (which starts with BOS).
pub fn forward<T: Float>(
    model: &Model<T>,
    context: &[FragmentId],
    next_type: NodeKind,
    parent: FragmentId,
) -> Result<Vec<T>, Error> {
    let mut state = model.initial_state();
    for &id in context {
        model.step(&mut state, id)?;
    }
    model.predict(&state, next_type, parent)
}

/// Both loss terms for one prediction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossBreakdown<T> {
    pub l1: T,
    pub l2: T,
}

/// Membership of ids in kinds, derived from a vocabulary.
#[derive(Debug, Clone)]
struct KindTable {
    kind_of: Vec<Option<NodeKind>>,
}

impl KindTable {
    fn new(vocab: &Vocabulary) -> Self {
        KindTable { kind_of: (0..vocab.len() as u32).map(|i| vocab.kind_of(FragmentId(i))).collect() }
    }

    fn target(&self, id: FragmentId) -> Result<(usize, NodeKind), Error> {
        match self.kind_of.get(id.index()) {
            None => Err(Error::VocabRangeError(id.0)),
            Some(None) => Err(Error::ReservedTarget),
            Some(Some(k)) => Ok((id.index(), *k)),
        }
    }
}

/// Type-error term and the ids making up the top-`n` set.
///
/// The type set of a kind holds every id of that kind, its OoV id included.
/// The two sums are compared pairwise over the symmetric difference of the
/// two sets, which keeps the result non-negative under rounding.
fn type_error<T: Float>(dist: &[T], kind: NodeKind, kinds: &KindTable) -> (T, Vec<usize>) {
    let in_type = |i: usize| kinds.kind_of[i] == Some(kind);
    let n = (0..dist.len()).filter(|&i| in_type(i)).count();
    let mut order: Vec<usize> = (0..dist.len()).collect();
    let by_prob = |a: &usize, b: &usize| dist[*b].partial_cmp(&dist[*a]).unwrap_or(core::cmp::Ordering::Equal).then(a.cmp(b));
    if n < order.len() && n > 0 {
        order.select_nth_unstable_by(n - 1, by_prob);
    }
    order.truncate(n);
    let mut is_top = vec![false; dist.len()];
    for &i in &order {
        is_top[i] = true;
    }
    let mut over: Vec<T> = order.iter().filter(|&&i| !in_type(i)).map(|&i| dist[i]).collect();
    let mut under: Vec<T> = (0..dist.len()).filter(|&i| in_type(i) && !is_top[i]).map(|i| dist[i]).collect();
    let desc = |a: &T, b: &T| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal);
    over.sort_by(desc);
    under.sort_by(desc);
    let l2 = over.iter().zip(&under).fold(T::zero(), |acc, (a, b)| acc + (*a - *b).max(T::zero()));
    (l2.min(T::one()), order)
}

fn cross_entropy<T: Float>(p: T) -> T {
    let floor = T::from(PROB_FLOOR).unwrap();
    -(p.max(floor).min(T::one())).ln()
}

/// `l1` and `l2` of a normalized distribution against the true id.
pub fn loss<T: Float>(dist: &[T], true_id: FragmentId, vocab: &Vocabulary) -> Result<LossBreakdown<T>, Error> {
    if dist.len() != vocab.len() {
        return Err(Error::VocabRangeError(dist.len() as u32));
    }
    let kinds = KindTable::new(vocab);
    let (y, kind) = kinds.target(true_id)?;
    let (l2, _) = type_error(dist, kind, &kinds);
    Ok(LossBreakdown { l1: cross_entropy(dist[y]), l2 })
}

/// Sums over the prediction steps of one pass.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Totals {
    pub l1: f64,
    pub l2: f64,
    pub correct: usize,
    pub steps: usize,
}

impl Totals {
    fn add(&mut self, o: Totals) {
        self.l1 += o.l1;
        self.l2 += o.l2;
        self.correct += o.correct;
        self.steps += o.steps;
    }
}

fn argmax<T: Float>(v: &[T]) -> usize {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if *x > v[best] {
            best = i;
        }
    }
    best
}

/// Runs one sequence, accumulating `scale ·` gradients of `l1 + l2` into
/// `grads` when given. Gradients do not cross chunks of `bptt` steps.
fn run_sequence<T: Float>(
    model: &Model<T>,
    kinds: &KindTable,
    seq: &EncodedSequence,
    bptt: usize,
    mut grads: Option<(&mut Params<T>, T)>,
) -> Result<Totals, Error> {
    let hp = &model.hp;
    let (h, d, dt) = (hp.hidden_dim, hp.embed_dim, hp.type_embed_dim);
    let mut totals = Totals::default();
    let mut state = model.initial_state();
    let inputs = seq.ids.len().saturating_sub(1);
    for id in &seq.ids {
        model.check_id(*id)?;
    }
    let mut start = 0;
    while start < inputs {
        let end = (start + bptt).min(inputs);
        let mut caches = Vec::with_capacity(end - start);
        let mut dh_out: Vec<Vec<T>> = Vec::with_capacity(end - start);
        for s in start..end {
            caches.push(model.step_cached(&mut state, seq.ids[s].index()));
            let t = s + 1;
            let (y, kind) = kinds.target(seq.ids[t])?;
            let parent = seq.parent_id(t).index();
            let u = model.output_input(&state.h, kind, parent);
            let mut p = model.logits(&u);
            softmax_in_place(&mut p);
            let (l2, top) = type_error(&p, kind, kinds);
            let l1 = cross_entropy(p[y]);
            totals.l1 += l1.to_f64().unwrap_or(f64::NAN);
            totals.l2 += l2.to_f64().unwrap_or(f64::NAN);
            totals.correct += usize::from(argmax(&p) == y);
            totals.steps += 1;

            if let Some((g, scale)) = grads.as_mut() {
                // dl1/dz = p - onehot (zero once the floor clamps).
                let mut dz: Vec<T> = p.clone();
                if p[y] >= T::from(PROB_FLOOR).unwrap() {
                    dz[y] = dz[y] - T::one();
                } else {
                    dz.iter_mut().for_each(|v| *v = T::zero());
                }
                // dl2/dz_j = p_j (1[j in top] - 1[j in type]) - p_j l2.
                let mut is_top = vec![false; p.len()];
                for &i in &top {
                    is_top[i] = true;
                }
                for j in 0..p.len() {
                    let ind_top = if is_top[j] { T::one() } else { T::zero() };
                    let ind_type = if kinds.kind_of[j] == Some(kind) { T::one() } else { T::zero() };
                    dz[j] = dz[j] + p[j] * (ind_top - ind_type) - p[j] * l2;
                }
                let mut du = vec![T::zero(); u.len()];
                for (j, dzj) in dz.iter().enumerate() {
                    let dzj = *dzj * *scale;
                    if dzj == T::zero() {
                        continue;
                    }
                    g.b_out.data[j] = g.b_out.data[j] + dzj;
                    let wrow = model.params.w_out.row(j);
                    let grow = g.w_out.row_mut(j);
                    for k in 0..u.len() {
                        grow[k] = grow[k] + dzj * u[k];
                        du[k] = du[k] + dzj * wrow[k];
                    }
                }
                let te = g.type_embedding.row_mut(kind.index());
                for k in 0..dt {
                    te[k] = te[k] + du[h + k];
                }
                let pe = g.embedding.row_mut(parent);
                for k in 0..d {
                    pe[k] = pe[k] + du[h + dt + k];
                }
                du.truncate(h);
                dh_out.push(du);
            }
        }

        if let Some((g, _)) = grads.as_mut() {
            let mut dh_next = vec![T::zero(); h];
            let mut dc_next = vec![T::zero(); h];
            for (cache, dh_o) in caches.iter().zip(&dh_out).rev() {
                let a = &cache.gates;
                let mut da = vec![T::zero(); 4 * h];
                for j in 0..h {
                    let (i, f, gg, o) = (a[j], a[h + j], a[2 * h + j], a[3 * h + j]);
                    let dh = dh_o[j] + dh_next[j];
                    let tc = cache.tanh_c[j];
                    let dc = dc_next[j] + dh * o * (T::one() - tc * tc);
                    da[j] = dc * gg * i * (T::one() - i);
                    da[h + j] = dc * cache.c_prev[j] * f * (T::one() - f);
                    da[2 * h + j] = dc * i * (T::one() - gg * gg);
                    da[3 * h + j] = dh * tc * o * (T::one() - o);
                    dc_next[j] = dc * f;
                }
                let x = model.params.embedding.row(cache.input).to_vec();
                let mut dx = vec![T::zero(); d];
                let mut dhp = vec![T::zero(); h];
                for (r, dar) in da.iter().enumerate() {
                    if *dar == T::zero() {
                        continue;
                    }
                    g.b_gates.data[r] = g.b_gates.data[r] + *dar;
                    let wi = model.params.w_input.row(r);
                    let gi = g.w_input.row_mut(r);
                    for k in 0..d {
                        gi[k] = gi[k] + *dar * x[k];
                        dx[k] = dx[k] + *dar * wi[k];
                    }
                    let wh = model.params.w_hidden.row(r);
                    let gh = g.w_hidden.row_mut(r);
                    for k in 0..h {
                        gh[k] = gh[k] + *dar * cache.h_prev[k];
                        dhp[k] = dhp[k] + *dar * wh[k];
                    }
                }
                let e = g.embedding.row_mut(cache.input);
                for k in 0..d {
                    e[k] = e[k] + dx[k];
                }
                dh_next = dhp;
            }
        }
        start = end;
    }
    Ok(totals)
}

/// Mean `l1 + l2` over all steps of `seqs` and its gradient.
pub fn gradients<T: Float>(
    model: &Model<T>,
    vocab: &Vocabulary,
    seqs: &[EncodedSequence],
) -> Result<(T, Params<T>), Error> {
    let kinds = KindTable::new(vocab);
    let steps: usize = seqs.iter().map(EncodedSequence::targets).sum();
    if steps == 0 {
        return Err(Error::EmptyDataset);
    }
    let scale = T::one() / T::from(steps).unwrap();
    let mut g = Params::zeros(model.vocab_size(), &model.hp);
    let mut totals = Totals::default();
    for s in seqs {
        totals.add(run_sequence(model, &kinds, s, model.hp.bptt_cap, Some((&mut g, scale)))?);
    }
    Ok((T::from((totals.l1 + totals.l2) / steps as f64).unwrap(), g))
}

/// Mean `l1 + l2` over all steps of `seqs`.
pub fn mean_loss<T: Float>(model: &Model<T>, vocab: &Vocabulary, seqs: &[EncodedSequence]) -> Result<f64, Error> {
    let m = evaluate(model, vocab, seqs)?;
    Ok(m.mean_l1 + m.mean_l2)
}

/// Dataset metrics of a model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub mean_l1: f64,
    pub mean_l2: f64,
    pub accuracy: f64,
    pub steps: usize,
}

impl Metrics {
    pub fn perplexity(&self) -> f64 {
        Float::exp(self.mean_l1)
    }
}

pub fn evaluate<T: Float>(model: &Model<T>, vocab: &Vocabulary, seqs: &[EncodedSequence]) -> Result<Metrics, Error> {
    let kinds = KindTable::new(vocab);
    let mut totals = Totals::default();
    for s in seqs {
        totals.add(run_sequence(model, &kinds, s, usize::MAX, None)?);
    }
    if totals.steps == 0 {
        return Err(Error::EmptyDataset);
    }
    let n = totals.steps as f64;
    Ok(Metrics { mean_l1: totals.l1 / n, mean_l2: totals.l2 / n, accuracy: totals.correct as f64 / n, steps: totals.steps })
}

/// `exp` of the mean cross entropy over every prediction step.
pub fn perplexity<T: Float>(model: &Model<T>, vocab: &Vocabulary, seqs: &[EncodedSequence]) -> Result<f64, Error> {
    evaluate(model, vocab, seqs).map(|m| m.perplexity())
}

/// Mean type error over every prediction step.
pub fn type_error_rate<T: Float>(model: &Model<T>, vocab: &Vocabulary, seqs: &[EncodedSequence]) -> Result<f64, Error> {
    evaluate(model, vocab, seqs).map(|m| m.mean_l2)
}

/// Result of one training epoch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpochStats {
    pub mean_l1: f64,
    pub mean_l2: f64,
    pub learning_rate: f64,
}

/// One pass of SGD with momentum over shuffled minibatches.
///
/// Per batch: gradient of the mean loss, norm clipping, then L2 penalty,
/// `buf = μ·buf + g` and `w -= lr·buf`.
pub fn train_epoch(
    model: &mut Model<f32>,
    vocab: &Vocabulary,
    seqs: &[EncodedSequence],
    hp: &Hyperparams,
) -> Result<EpochStats, Error> {
    hp.validate()?;
    if seqs.iter().all(|s| s.targets() == 0) {
        return Err(Error::EmptyDataset);
    }
    let kinds = KindTable::new(vocab);
    let lr = hp.learning_rate * Float::powi(hp.lr_decay, model.epochs_trained as i32);
    let mut order: Vec<usize> = (0..seqs.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(hp.rng_seed);
    rng.set_stream(u64::from(model.epochs_trained) + 1);
    order.shuffle(&mut rng);

    let mut totals = Totals::default();
    for (batch, chunk) in order.chunks(hp.batch_size).enumerate() {
        let steps: usize = chunk.iter().map(|&i| seqs[i].targets()).sum();
        if steps == 0 {
            continue;
        }
        let scale = 1.0 / steps as f32;
        let mut g = Params::<f32>::zeros(model.vocab_size(), &model.hp);
        let mut bt = Totals::default();
        for &i in chunk {
            bt.add(run_sequence(model, &kinds, &seqs[i], hp.bptt_cap, Some((&mut g, scale)))?);
        }
        let norm_sq: f64 =
            g.tensors().iter().flat_map(|t| t.data.iter()).map(|v| f64::from(*v) * f64::from(*v)).sum();
        if !(bt.l1 + bt.l2).is_finite() || !norm_sq.is_finite() {
            return Err(Error::DivergedError { batch });
        }
        let norm = Float::sqrt(norm_sq);
        let clip = if norm > hp.grad_clip_norm { (hp.grad_clip_norm / norm) as f32 } else { 1.0 };
        let (lr32, mu, wd) = (lr as f32, hp.momentum as f32, hp.l2_penalty as f32);
        for ((w, buf), gt) in model.params.tensors_mut().into_iter().zip(model.momentum.tensors_mut()).zip(g.tensors()) {
            for ((wv, bv), gv) in w.data.iter_mut().zip(buf.data.iter_mut()).zip(&gt.data) {
                let d = *gv * clip + wd * *wv;
                *bv = mu * *bv + d;
                *wv -= lr32 * *bv;
            }
        }
        if !model.params.all_finite() {
            return Err(Error::DivergedError { batch });
        }
        totals.add(bt);
    }
    model.epochs_trained += 1;
    let n = totals.steps as f64;
    Ok(EpochStats { mean_l1: totals.l1 / n, mean_l2: totals.l2 / n, learning_rate: lr })
}

/// Central-difference step used by [`check_gradients`].
pub const GRAD_CHECK_EPS: f64 = 1e-4;

/// Largest relative disagreement between analytic and finite-difference
/// gradients of mean `l1 + l2`, over every weight of every tensor.
///
/// Runs in double precision. Entries where both gradients are below
/// `1e-10` in magnitude count as agreeing.
pub fn check_gradients(model: &Model<f32>, vocab: &Vocabulary, sample: &[EncodedSequence]) -> Result<f64, Error> {
    let mut m64 = Model {
        hp: model.hp.clone(),
        params: model.params.cast::<f64>(),
        momentum: model.momentum.cast::<f64>(),
        epochs_trained: model.epochs_trained,
    };
    let (_, analytic) = gradients(&m64, vocab, sample)?;
    let mut worst = 0.0f64;
    for t in 0..Params::<f64>::NAMES.len() {
        let len = m64.params.tensors()[t].data.len();
        for k in 0..len {
            let orig = m64.params.tensors()[t].data[k];
            m64.params.tensors_mut()[t].data[k] = orig + GRAD_CHECK_EPS;
            let plus = mean_loss(&m64, vocab, sample)?;
            m64.params.tensors_mut()[t].data[k] = orig - GRAD_CHECK_EPS;
            let minus = mean_loss(&m64, vocab, sample)?;
            m64.params.tensors_mut()[t].data[k] = orig;
            let numeric = (plus - minus) / (2.0 * GRAD_CHECK_EPS);
            let a = analytic.tensors()[t].data[k];
            let denom = a.abs().max(numeric.abs());
            if denom > 1e-10 {
                worst = worst.max((a - numeric).abs() / denom);
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_corpus::toy_corpus;
    use alloc::vec;
    use proptest::{prop_assert, proptest};

    fn tiny_hp(seed: u64) -> Hyperparams {
        Hyperparams { embed_dim: 6, hidden_dim: 5, type_embed_dim: 3, rng_seed: seed, ..Hyperparams::default() }
    }

    #[test]
    fn init_is_deterministic_and_shaped() {
        let (vocab, _) = toy_corpus();
        let a = init_model(&Hyperparams::default(), &vocab).unwrap();
        let b = init_model(&Hyperparams::default(), &vocab).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.params.embedding.rows, a.params.embedding.cols), (vocab.len(), 32));
        assert_eq!((a.params.w_out.rows, a.params.w_out.cols), (vocab.len(), 32 + 8 + 32));
        assert!(a.params.tensors().iter().all(|t| t.data.iter().all(|v| v.abs() <= 0.05)));
        let bad = Hyperparams { hidden_dim: 0, ..Hyperparams::default() };
        assert!(matches!(init_model(&bad, &vocab), Err(Error::InvalidHyperparams(_))));
    }

    #[test]
    fn forward_is_a_distribution() {
        let (vocab, seqs) = toy_corpus();
        let model = init_model(&tiny_hp(3), &vocab).unwrap();
        let s = &seqs[0];
        let kind = vocab.kind_of(s.ids[3]).unwrap();
        let p = forward(&model, &s.ids[..3], kind, s.parent_id(3)).unwrap();
        let sum: f64 = p.iter().map(|v| f64::from(*v)).sum();
        assert!((sum - 1.0).abs() < 1e-6);
        assert!(p.iter().all(|v| *v > 0.0));
        let err = forward(&model, &[FragmentId(vocab.len() as u32)], kind, FragmentId::BOS);
        assert_eq!(err, Err(Error::VocabRangeError(vocab.len() as u32)));
    }

    #[test]
    fn zero_output_layer_is_uniform() {
        let (vocab, seqs) = toy_corpus();
        let mut model = init_model(&tiny_hp(1), &vocab).unwrap();
        model.params.w_out.data.iter_mut().for_each(|v| *v = 0.0);
        model.params.b_out.data.iter_mut().for_each(|v| *v = 0.0);
        let p = forward(&model, &seqs[0].ids[..2], NodeKind::Identifier, FragmentId::BOS).unwrap();
        let u = 1.0 / vocab.len() as f32;
        assert!(p.iter().all(|v| (*v - u).abs() < 1e-7));
    }

    #[test]
    fn loss_examples() {
        let (vocab, seqs) = toy_corpus();
        let y = seqs[0].ids[1];
        let mut one_hot = vec![0.0f64; vocab.len()];
        one_hot[y.index()] = 1.0;
        let l = loss(&one_hot, y, &vocab).unwrap();
        assert_eq!((l.l1, l.l2), (0.0, 0.0));

        let uniform = vec![1.0 / vocab.len() as f64; vocab.len()];
        let l = loss(&uniform, y, &vocab).unwrap();
        assert!((l.l1 - (vocab.len() as f64).ln()).abs() < 1e-9);
        assert!(l.l2.abs() < 1e-12);

        // A kind with no regular entries has a type set of just its OoV id.
        let lonely = FragmentId::oov(NodeKind::DebuggerStatement);
        let mut wrong = vec![0.0f64; vocab.len()];
        wrong[y.index()] = 1.0;
        let l = loss(&wrong, lonely, &vocab).unwrap();
        assert_eq!(l.l2, 1.0);
        assert!((l.l1 - -(PROB_FLOOR.ln())).abs() < 1e-9);

        assert_eq!(loss(&uniform, FragmentId::BOS, &vocab), Err(Error::ReservedTarget));
    }

    proptest! {
        #[test]
        fn loss_terms_are_bounded(weights in proptest::collection::vec(0.0f64..1.0, 80), pick in 1usize..80, spike in 0usize..80) {
            let (vocab, _) = toy_corpus();
            let mut w: Vec<f64> = weights.into_iter().cycle().take(vocab.len()).collect();
            w[spike % vocab.len()] += 5.0;
            let total: f64 = w.iter().sum();
            let dist: Vec<f64> = w.iter().map(|v| v / total).collect();
            let y = FragmentId((pick % (vocab.len() - 1) + 1) as u32);
            let l = loss(&dist, y, &vocab).unwrap();
            prop_assert!(l.l1 >= 0.0);
            prop_assert!((0.0..=1.0).contains(&l.l2));
        }
    }

    #[test]
    fn analytic_gradients_match_finite_differences() {
        let (vocab, seqs) = toy_corpus();
        for seed in 0..3 {
            let mut model = init_model(&tiny_hp(seed), &vocab).unwrap();
            // Larger weights than the default init exercise the nonlinearities.
            let mut rng = ChaCha8Rng::seed_from_u64(seed + 100);
            for t in model.params.tensors_mut() {
                t.data.iter_mut().for_each(|v| *v = rng.gen_range(-0.5..0.5));
            }
            let err = check_gradients(&model, &vocab, &seqs[..2]).unwrap();
            assert!(err < 1e-4, "seed {seed}: {err}");
        }
    }

    #[test]
    fn zero_learning_rate_leaves_weights_alone() {
        let (vocab, seqs) = toy_corpus();
        let hp = Hyperparams { learning_rate: 0.0, ..tiny_hp(2) };
        let mut model = init_model(&hp, &vocab).unwrap();
        let before = model.params.clone();
        train_epoch(&mut model, &vocab, &seqs, &hp).unwrap();
        assert_eq!(model.params, before);
        assert_ne!(model.momentum, Params::zeros(vocab.len(), &hp));
    }

    #[test]
    fn training_is_deterministic_and_reduces_loss() {
        let (vocab, seqs) = toy_corpus();
        let hp = tiny_hp(4);
        let run = || {
            let mut model = init_model(&hp, &vocab).unwrap();
            let trace: Vec<EpochStats> = (0..15).map(|_| train_epoch(&mut model, &vocab, &seqs, &hp).unwrap()).collect();
            (model, trace)
        };
        let (m1, t1) = run();
        let (m2, t2) = run();
        assert_eq!(t1, t2);
        assert_eq!(m1, m2);
        assert!(t1.last().unwrap().mean_l1 < t1[0].mean_l1);
    }

    #[test]
    fn uniform_model_perplexity_is_vocab_size() {
        let (vocab, seqs) = toy_corpus();
        let mut model = init_model(&tiny_hp(0), &vocab).unwrap();
        model.params.w_out.data.iter_mut().for_each(|v| *v = 0.0);
        model.params.b_out.data.iter_mut().for_each(|v| *v = 0.0);
        let ppl = perplexity(&model, &vocab, &seqs).unwrap();
        let v = vocab.len() as f64;
        assert!((ppl - v).abs() <= 1e-6 * v, "{ppl}");
        assert_eq!(perplexity(&model, &vocab, &[]), Err(Error::EmptyDataset));
        let te = type_error_rate(&model, &vocab, &seqs).unwrap();
        assert!((0.0..=1.0).contains(&te));
    }
}
