//! Model checkpoint container.
//!
//! Layout: `FRAGLM1`, a little-endian `u32` header length, the JSON header,
//! every tensor as little-endian `f32` in manifest order, then a CRC32 of
//! everything before it.

use std::fs;
use std::path::Path;

use fraggen_core::nnlm::{Hyperparams, Model, Params, Tensor};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAGIC: &[u8; 7] = b"FRAGLM1";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HyperparamsJson {
    pub embed_dim: usize,
    pub hidden_dim: usize,
    pub type_embed_dim: usize,
    pub learning_rate: f64,
    pub lr_decay: f64,
    pub momentum: f64,
    pub l2_penalty: f64,
    pub batch_size: usize,
    pub bptt_cap: usize,
    pub grad_clip_norm: f64,
    pub epochs: usize,
    pub rng_seed: u64,
}

impl From<&Hyperparams> for HyperparamsJson {
    fn from(h: &Hyperparams) -> Self {
        HyperparamsJson {
            embed_dim: h.embed_dim,
            hidden_dim: h.hidden_dim,
            type_embed_dim: h.type_embed_dim,
            learning_rate: h.learning_rate,
            lr_decay: h.lr_decay,
            momentum: h.momentum,
            l2_penalty: h.l2_penalty,
            batch_size: h.batch_size,
            bptt_cap: h.bptt_cap,
            grad_clip_norm: h.grad_clip_norm,
            epochs: h.epochs,
            rng_seed: h.rng_seed,
        }
    }
}

impl From<&HyperparamsJson> for Hyperparams {
    fn from(h: &HyperparamsJson) -> Self {
        Hyperparams {
            embed_dim: h.embed_dim,
            hidden_dim: h.hidden_dim,
            type_embed_dim: h.type_embed_dim,
            learning_rate: h.learning_rate,
            lr_decay: h.lr_decay,
            momentum: h.momentum,
            l2_penalty: h.l2_penalty,
            batch_size: h.batch_size,
            bptt_cap: h.bptt_cap,
            grad_clip_norm: h.grad_clip_norm,
            epochs: h.epochs,
            rng_seed: h.rng_seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct TensorInfo {
    name: String,
    rows: usize,
    cols: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Header {
    version: u32,
    hyperparams: HyperparamsJson,
    vocab_hash: String,
    vocab_size: usize,
    epochs_trained: u32,
    tensors: Vec<TensorInfo>,
}

fn manifest(p: &Params<f32>, prefix: &str) -> Vec<TensorInfo> {
    Params::<f32>::NAMES
        .iter()
        .zip(p.tensors())
        .map(|(n, t)| TensorInfo { name: format!("{prefix}{n}"), rows: t.rows, cols: t.cols })
        .collect()
}

pub fn encode(model: &Model<f32>, vocab_hash: &str) -> Result<Vec<u8>> {
    let mut tensors = manifest(&model.params, "params.");
    tensors.extend(manifest(&model.momentum, "momentum."));
    let header = Header {
        version: FORMAT_VERSION,
        hyperparams: (&model.hp).into(),
        vocab_hash: vocab_hash.to_string(),
        vocab_size: model.vocab_size(),
        epochs_trained: model.epochs_trained,
        tensors,
    };
    let header = serde_json::to_vec(&header)?;
    let mut out = Vec::with_capacity(64 + header.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(header.len() as u32).to_le_bytes());
    out.extend_from_slice(&header);
    for t in model.params.tensors().into_iter().chain(model.momentum.tensors()) {
        for v in &t.data {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    let crc = crc32fast::hash(&out);
    out.extend_from_slice(&crc.to_le_bytes());
    Ok(out)
}

/// Decodes a checkpoint. With `expected_vocab_hash`, a checkpoint trained
/// on another vocabulary is refused.
pub fn decode(bytes: &[u8], expected_vocab_hash: Option<&str>) -> Result<Model<f32>> {
    if bytes.len() < MAGIC.len() + 8 || &bytes[..MAGIC.len()] != MAGIC {
        return Err(Error::ChecksumError);
    }
    let (body, crc) = bytes.split_at(bytes.len() - 4);
    if crc32fast::hash(body) != u32::from_le_bytes(crc.try_into().unwrap()) {
        return Err(Error::ChecksumError);
    }
    let rest = &body[MAGIC.len()..];
    let hlen = u32::from_le_bytes(rest[..4].try_into().unwrap()) as usize;
    let header_bytes = rest.get(4..4 + hlen).ok_or(Error::ChecksumError)?;
    let header: Header = serde_json::from_slice(header_bytes)?;
    if header.version != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported checkpoint version {}", header.version)));
    }
    if let Some(h) = expected_vocab_hash {
        if h != header.vocab_hash {
            return Err(Error::VocabMismatch);
        }
    }
    let hp: Hyperparams = (&header.hyperparams).into();
    hp.validate()?;
    let mut params = Params::<f32>::zeros(header.vocab_size, &hp);
    let mut momentum = Params::<f32>::zeros(header.vocab_size, &hp);
    let mut expected = manifest(&params, "params.");
    expected.extend(manifest(&momentum, "momentum."));
    if expected != header.tensors {
        return Err(Error::Format("tensor manifest does not match hyperparameters".into()));
    }
    let mut payload = &rest[4 + hlen..];
    for t in params.tensors_mut().into_iter().chain(momentum.tensors_mut()) {
        read_tensor(t, &mut payload)?;
    }
    if !payload.is_empty() {
        return Err(Error::Format("trailing bytes after tensors".into()));
    }
    Ok(Model { hp, params, momentum, epochs_trained: header.epochs_trained })
}

fn read_tensor(t: &mut Tensor<f32>, payload: &mut &[u8]) -> Result<()> {
    let n = t.data.len() * 4;
    if payload.len() < n {
        return Err(Error::Format("tensor payload is short".into()));
    }
    let (mine, rest) = payload.split_at(n);
    for (v, b) in t.data.iter_mut().zip(mine.chunks_exact(4)) {
        *v = f32::from_le_bytes(b.try_into().unwrap());
    }
    *payload = rest;
    Ok(())
}

pub fn save(path: &Path, model: &Model<f32>, vocab_hash: &str) -> Result<()> {
    fs::write(path, encode(model, vocab_hash)?).map_err(|e| Error::io(path, e))
}

pub fn load(path: &Path, expected_vocab_hash: Option<&str>) -> Result<Model<f32>> {
    decode(&fs::read(path).map_err(|e| Error::io(path, e))?, expected_vocab_hash)
}
