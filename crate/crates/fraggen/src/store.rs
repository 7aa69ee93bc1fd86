//! On-disk fragment store: `vocab.jsonl`, `sequences.jsonl`,
//! `markov.jsonl` and the normalized seed ASTs under `seeds/`.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use base64::{engine::general_purpose::STANDARD as B64, Engine};
use fraggen_core::fragment::{canonical_key, EncodedSequence, EntryKind, FragmentId, VocabEntry, Vocabulary};
use fraggen_core::suggest::MarkovModel;
use fraggen_core::{AstNode, NodeKind};
use serde::{Deserialize, Serialize};
use serde_json::Value as Json;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::estree;

pub const VOCAB_FILE: &str = "vocab.jsonl";
pub const SEQUENCES_FILE: &str = "sequences.jsonl";
pub const MARKOV_FILE: &str = "markov.jsonl";
pub const SEEDS_DIR: &str = "seeds";

#[derive(Serialize, Deserialize)]
struct VocabLine {
    id: u32,
    key: String,
    kind: String,
    frequency: u64,
    fragment: Json,
}

const BOS_KIND: &str = "<BOS>";
const OOV_PREFIX: &str = "<OoV>";

pub fn write_vocab(path: &Path, vocab: &Vocabulary) -> Result<()> {
    write_lines(path, vocab.entries().iter().enumerate().map(|(id, e)| {
        let (kind, fragment) = match &e.kind {
            EntryKind::Bos => (BOS_KIND.to_string(), Json::Null),
            EntryKind::Oov(k) => (format!("{OOV_PREFIX}{}", k.name()), Json::Null),
            EntryKind::Fragment(f) => (f.kind().name().to_string(), estree::fragment_to_json(f)),
        };
        VocabLine { id: id as u32, key: B64.encode(&e.key), kind, frequency: e.frequency, fragment }
    }))
}

pub fn read_vocab(path: &Path) -> Result<Vocabulary> {
    let mut entries = Vec::new();
    for (n, line) in read_lines::<VocabLine>(path)?.into_iter().enumerate() {
        let bad = |what: &str| Error::Format(format!("{}: entry {n}: {what}", path.display()));
        if line.id as usize != n {
            return Err(bad("ids are not dense"));
        }
        let key = B64.decode(&line.key).map_err(|_| bad("key is not base64"))?;
        let kind = if line.kind == BOS_KIND {
            EntryKind::Bos
        } else if let Some(k) = line.kind.strip_prefix(OOV_PREFIX) {
            EntryKind::Oov(NodeKind::from_name(k).ok_or_else(|| bad("unknown kind"))?)
        } else {
            let frag = estree::fragment_from_json(&line.fragment)?;
            if canonical_key(&frag) != key {
                return Err(bad("key does not match fragment"));
            }
            EntryKind::Fragment(frag)
        };
        entries.push(VocabEntry { key, kind, frequency: line.frequency });
    }
    Ok(Vocabulary::from_entries(entries)?)
}

/// Identity of a vocabulary: SHA-256 over its keys in id order.
pub fn vocab_hash(vocab: &Vocabulary) -> String {
    let mut h = Sha256::new();
    for e in vocab.entries() {
        h.update((e.key.len() as u32).to_le_bytes());
        h.update(&e.key);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize, Deserialize)]
struct SequenceLine {
    source: String,
    ids: Vec<u32>,
    parents: Vec<u32>,
}

pub fn write_sequences(path: &Path, seqs: &[EncodedSequence]) -> Result<()> {
    write_lines(
        path,
        seqs.iter().map(|s| SequenceLine {
            source: s.source.clone(),
            ids: s.ids.iter().map(|i| i.0).collect(),
            parents: s.parent_pos.clone(),
        }),
    )
}

pub fn read_sequences(path: &Path, vocab: &Vocabulary) -> Result<Vec<EncodedSequence>> {
    read_lines::<SequenceLine>(path)?
        .into_iter()
        .map(|l| {
            let ok = l.ids.len() == l.parents.len()
                && l.ids.first() == Some(&0)
                && l.ids.iter().all(|&i| (i as usize) < vocab.len())
                && l.parents.iter().enumerate().skip(1).all(|(i, &p)| (p as usize) < i);
            if !ok {
                return Err(Error::Format(format!("{}: bad sequence for {}", path.display(), l.source)));
            }
            Ok(EncodedSequence { source: l.source, ids: l.ids.into_iter().map(FragmentId).collect(), parent_pos: l.parents })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct MarkovLine {
    context: Vec<u32>,
    next: u32,
    count: u64,
}

pub fn write_markov(path: &Path, m: &MarkovModel) -> Result<()> {
    write_lines(
        path,
        m.counts.iter().flat_map(|(ctx, next)| {
            next.iter().map(move |(n, c)| MarkovLine { context: ctx.clone(), next: *n, count: *c })
        }),
    )
}

pub fn read_markov(path: &Path) -> Result<MarkovModel> {
    let mut m = MarkovModel::default();
    for l in read_lines::<MarkovLine>(path)? {
        if l.context.len() > MarkovModel::ORDER {
            return Err(Error::Format(format!("{}: context longer than {}", path.display(), MarkovModel::ORDER)));
        }
        *m.counts.entry(l.context).or_default().entry(l.next).or_default() += l.count;
    }
    Ok(m)
}

/// Writes each seed as `seeds/<name>.json`.
pub fn write_seeds(dir: &Path, seeds: &[(String, AstNode)]) -> Result<()> {
    let seeds_dir = dir.join(SEEDS_DIR);
    fs::create_dir_all(&seeds_dir).map_err(|e| Error::io(&seeds_dir, e))?;
    for (name, ast) in seeds {
        let path = seeds_dir.join(format!("{name}.json"));
        fs::write(&path, estree::encode_ast(ast)?).map_err(|e| Error::io(&path, e))?;
    }
    Ok(())
}

/// Every `*.json` AST in `dir`, sorted by file name.
pub fn read_ast_dir(dir: &Path) -> Result<Vec<(String, AstNode)>> {
    json_files(dir)?
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p).map_err(|e| Error::io(&p, e))?;
            let ast = estree::decode_ast(&text).map_err(|e| Error::Format(format!("{}: {e}", p.display())))?;
            Ok((file_stem(&p), ast))
        })
        .collect()
}

pub fn json_files(dir: &Path) -> Result<Vec<PathBuf>> {
    files_with_extension(dir, "json")
}

pub fn files_with_extension(dir: &Path, ext: &str) -> Result<Vec<PathBuf>> {
    let mut out: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == ext))
        .collect();
    out.sort();
    Ok(out)
}

pub fn file_stem(p: &Path) -> String {
    p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Everything `ingest` produces, loaded back.
#[derive(Debug)]
pub struct Store {
    pub vocab: Vocabulary,
    pub sequences: Vec<EncodedSequence>,
    pub seeds: Vec<(String, AstNode)>,
}

impl Store {
    pub fn load(dir: &Path) -> Result<Store> {
        let vocab = read_vocab(&dir.join(VOCAB_FILE))?;
        let sequences = read_sequences(&dir.join(SEQUENCES_FILE), &vocab)?;
        let seeds = read_ast_dir(&dir.join(SEEDS_DIR))?;
        Ok(Store { vocab, sequences, seeds })
    }
}

fn write_lines<T: Serialize>(path: &Path, items: impl IntoIterator<Item = T>) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    for item in items {
        serde_json::to_writer(&mut w, &item)?;
        w.write_all(b"\n").map_err(|e| Error::io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

fn read_lines<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line)?);
    }
    Ok(out)
}
