//! Corpus ingestion: fixture ASTs or raw sources → normalized seeds plus
//! the fragment store.

use std::fs;
use std::path::{Path, PathBuf};

use fraggen_core::fragment::{build_vocabulary, fragmentize, EncodedSequence, Vocabulary, MAX_SEQUENCE_LEN};
use fraggen_core::normalize::{inline_eval, normalize, BuiltinRegistry, ProgramParser};
use fraggen_core::print::print_program;
use fraggen_core::suggest::MarkovModel;
use fraggen_core::AstNode;

use crate::adapter::Adapter;
use crate::error::{Error, Result};
use crate::store;

/// Files larger than this many bytes are skipped.
pub const DEFAULT_MAX_FILE_SIZE: usize = 30 * 1024;

#[derive(Debug, Clone)]
pub struct IngestOptions {
    pub max_file_size: usize,
    pub min_freq: u64,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions { max_file_size: DEFAULT_MAX_FILE_SIZE, min_freq: fraggen_core::fragment::DEFAULT_MIN_FREQ }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub files: usize,
    pub kept: usize,
    pub too_large: usize,
    pub too_long: usize,
    /// Unparseable files or files using unsupported syntax, with the reason.
    pub rejected: Vec<(PathBuf, String)>,
    pub vocab_size: usize,
    pub fragments: usize,
}

/// Normalizes one program, inlining constant `eval` strings first when a
/// parser is at hand.
pub fn prepare(ast: &AstNode, builtins: &BuiltinRegistry, parser: Option<&dyn ProgramParser>) -> AstNode {
    let inlined = match parser {
        Some(p) => inline_eval(ast, p),
        None => ast.clone(),
    };
    normalize(&inlined, builtins).0
}

/// Reads every `*.json` ESTree file of `dir`.
pub fn ingest_fixtures(
    dir: &Path,
    builtins: &BuiltinRegistry,
    parser: Option<&dyn ProgramParser>,
    opts: &IngestOptions,
) -> Result<(Vec<(String, AstNode)>, IngestReport)> {
    let mut report = IngestReport::default();
    let mut seeds = Vec::new();
    for path in store::json_files(dir)? {
        report.files += 1;
        let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        let ast = match crate::estree::decode_ast(&text) {
            Ok(a) => a,
            Err(e) => {
                report.rejected.push((path, e.to_string()));
                continue;
            }
        };
        // Fixture size is judged on the source the tree stands for.
        match print_program(&ast) {
            Ok(src) if src.len() > opts.max_file_size => report.too_large += 1,
            Ok(_) => seeds.push((store::file_stem(&path), prepare(&ast, builtins, parser))),
            Err(e) => report.rejected.push((path, e.to_string())),
        }
    }
    Ok((seeds, report))
}

/// Parses every `*.js` file of `dir` with the adapter.
pub fn ingest_sources(
    dir: &Path,
    builtins: &BuiltinRegistry,
    adapter: &Adapter,
    opts: &IngestOptions,
) -> Result<(Vec<(String, AstNode)>, IngestReport)> {
    let mut report = IngestReport::default();
    let mut seeds = Vec::new();
    for path in store::files_with_extension(dir, "js")? {
        report.files += 1;
        let src = fs::read(&path).map_err(|e| Error::io(&path, e))?;
        if src.len() > opts.max_file_size {
            report.too_large += 1;
            continue;
        }
        let src = String::from_utf8_lossy(&src);
        match adapter.parse(&src) {
            Ok(ast) => seeds.push((store::file_stem(&path), prepare(&ast, builtins, Some(adapter)))),
            Err(e) => report.rejected.push((path, e.to_string())),
        }
    }
    Ok((seeds, report))
}

pub struct Corpus {
    pub vocab: Vocabulary,
    pub sequences: Vec<EncodedSequence>,
    pub markov: MarkovModel,
}

/// Fragmentizes the seeds and builds the vocabulary, encodings and Markov
/// counts. Seeds with too many fragments are dropped from `seeds`.
pub fn build_corpus(seeds: &mut Vec<(String, AstNode)>, report: &mut IngestReport, min_freq: u64) -> Result<Corpus> {
    let mut seqs = Vec::with_capacity(seeds.len());
    seeds.retain(|(name, ast)| {
        let mut seq = fragmentize(ast);
        if seq.len() > MAX_SEQUENCE_LEN {
            report.too_long += 1;
            return false;
        }
        seq.source = name.clone();
        seqs.push(seq);
        true
    });
    let (vocab, sequences) = build_vocabulary(&seqs, min_freq)?;
    report.kept = seeds.len();
    report.vocab_size = vocab.len();
    report.fragments = seqs.iter().map(|s| s.len()).sum();
    let markov = MarkovModel::train(&sequences);
    Ok(Corpus { vocab, sequences, markov })
}

/// Writes the whole store under `out`.
pub fn write_store(out: &Path, seeds: &[(String, AstNode)], corpus: &Corpus) -> Result<()> {
    fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    store::write_vocab(&out.join(store::VOCAB_FILE), &corpus.vocab)?;
    store::write_sequences(&out.join(store::SEQUENCES_FILE), &corpus.sequences)?;
    store::write_markov(&out.join(store::MARKOV_FILE), &corpus.markov)?;
    store::write_seeds(out, seeds)
}
