//! `fraggen` command line. Exit status 0 on success, 1 on usage errors,
//! 2 on runtime failures.

use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use fraggen_core::generate::GenerationParams;
use fraggen_core::nnlm::{init_model, train_epoch, Hyperparams};
use fraggen_core::AstNode;

use crate::adapter::{Adapter, ADAPTER_ENV};
use crate::harness::{self, Campaign, CampaignConfig, Classification, EngineConfig};
use crate::ingest::{self, IngestOptions, DEFAULT_MAX_FILE_SIZE};
use crate::pipeline::{Generator, LoadedSuggester, SuggesterKind};
use crate::store::{self, Store};
use crate::{checkpoint, registry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

/// Default checkpoint name inside a store directory.
pub const CHECKPOINT_FILE: &str = "model.ckpt";

#[derive(Parser, Debug)]
#[command(name = "fraggen", version, about = "Fragment-based JavaScript engine fuzzer")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a fragment store from ESTree fixtures or JavaScript sources.
    Ingest(IngestArgs),
    /// Train the fragment language model on a store.
    Train(TrainArgs),
    /// Write generated tests to a directory.
    Generate(GenerateArgs),
    /// Run a fuzzing campaign described by a config file.
    Fuzz(FuzzArgs),
    /// Summarize a finished or interrupted campaign.
    Stats(StatsArgs),
    /// Re-run a stored crash; exits 0 only if it crashes with the same key.
    Replay(ReplayArgs),
}

#[derive(Args, Debug)]
struct IngestArgs {
    /// Directory of ESTree `*.json` files.
    #[arg(long, conflicts_with = "sources", required_unless_present = "sources")]
    fixtures: Option<PathBuf>,
    /// Directory of `*.js` files, parsed by the adapter in $FRAGGEN_ADAPTER.
    #[arg(long)]
    sources: Option<PathBuf>,
    /// Store directory to create.
    #[arg(long)]
    out: PathBuf,
    /// Bundled engine registry (node, chakra, v8, jsc, spidermonkey) or a registry file.
    #[arg(long, default_value = "node")]
    builtins: String,
    /// Skip files whose source is larger than this many bytes.
    #[arg(long, default_value_t = DEFAULT_MAX_FILE_SIZE)]
    max_file_size: usize,
    /// Fragments seen fewer times become out-of-vocabulary.
    #[arg(long, default_value_t = fraggen_core::fragment::DEFAULT_MIN_FREQ)]
    min_freq: u64,
}

#[derive(Args, Debug)]
struct TrainArgs {
    /// Store directory written by `ingest`.
    #[arg(long)]
    store: PathBuf,
    /// Checkpoint to write [default: <store>/model.ckpt].
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = Hyperparams::default().epochs)]
    epochs: usize,
    /// Seed for initialization and shuffling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = Hyperparams::default().embed_dim)]
    embed_dim: usize,
    #[arg(long, default_value_t = Hyperparams::default().hidden_dim)]
    hidden_dim: usize,
    #[arg(long, default_value_t = Hyperparams::default().type_embed_dim)]
    type_embed_dim: usize,
    #[arg(long, default_value_t = Hyperparams::default().learning_rate)]
    learning_rate: f64,
    /// Learning-rate multiplier applied after every epoch.
    #[arg(long, default_value_t = Hyperparams::default().lr_decay)]
    lr_decay: f64,
    #[arg(long, default_value_t = Hyperparams::default().momentum)]
    momentum: f64,
    /// L2 weight penalty.
    #[arg(long, default_value_t = Hyperparams::default().l2_penalty)]
    l2_penalty: f64,
    #[arg(long, default_value_t = Hyperparams::default().batch_size)]
    batch_size: usize,
    /// Truncated backpropagation length.
    #[arg(long, default_value_t = Hyperparams::default().bptt_cap)]
    bptt: usize,
    /// Gradient norm clipping threshold.
    #[arg(long, default_value_t = Hyperparams::default().grad_clip_norm)]
    clip: f64,
}

#[derive(Args, Debug)]
struct GenerationArgs {
    /// Suggestions sampled among at each append.
    #[arg(long, default_value_t = GenerationParams::default().k_top)]
    k_top: usize,
    /// Most fragments appended per regrown subtree.
    #[arg(long, default_value_t = GenerationParams::default().f_max)]
    f_max: usize,
    /// lstm, markov or random.
    #[arg(long, default_value = "lstm")]
    suggester: SuggesterKind,
    /// Skip reference resolution.
    #[arg(long)]
    no_resolve: bool,
    /// Bundled engine registry or registry file.
    #[arg(long, default_value = "node")]
    builtins: String,
    /// Usage-hint table [default: bundled].
    #[arg(long)]
    usage_hints: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long)]
    store: PathBuf,
    /// Model checkpoint [default: <store>/model.ckpt].
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Directory receiving `test_NNNNNN.js` files.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 100)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    generation: GenerationArgs,
}

#[derive(Args, Debug)]
struct FuzzArgs {
    /// Campaign config (JSON).
    #[arg(long)]
    config: PathBuf,
}

#[derive(Args, Debug)]
struct StatsArgs {
    /// Campaign output directory.
    #[arg(long)]
    campaign: PathBuf,
}

#[derive(Args, Debug)]
struct ReplayArgs {
    /// Crash directory (`<campaign>/crashes/<key>`).
    #[arg(long)]
    crash: PathBuf,
    /// Campaign config whose engine is used.
    #[arg(long, required_unless_present = "engine", conflicts_with = "engine")]
    config: Option<PathBuf>,
    /// Engine binary, as an alternative to --config.
    #[arg(long)]
    engine: Option<PathBuf>,
}

/// Runs the command line `argv` (program name first) and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Cmd::Ingest(a) => cmd_ingest(a),
        Cmd::Train(a) => cmd_train(a),
        Cmd::Generate(a) => cmd_generate(a),
        Cmd::Fuzz(a) => cmd_fuzz(a),
        Cmd::Stats(a) => cmd_stats(a),
        Cmd::Replay(a) => cmd_replay(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_FAILURE
        }
    }
}

fn cmd_ingest(a: IngestArgs) -> anyhow::Result<i32> {
    let builtins = registry::load_builtins(&a.builtins)?;
    let opts = IngestOptions { max_file_size: a.max_file_size, min_freq: a.min_freq };
    let adapter = Adapter::from_env()?;
    let (mut seeds, mut report) = match (&a.fixtures, &a.sources) {
        (Some(dir), _) => ingest::ingest_fixtures(dir, &builtins, adapter.as_ref().map(|x| x as _), &opts)?,
        (None, Some(dir)) => {
            let Some(adapter) = adapter.as_ref() else {
                bail!("--sources needs a parser adapter; set {ADAPTER_ENV}");
            };
            ingest::ingest_sources(dir, &builtins, adapter, &opts)?
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let corpus = ingest::build_corpus(&mut seeds, &mut report, a.min_freq)?;
    ingest::write_store(&a.out, &seeds, &corpus)?;
    for (path, why) in &report.rejected {
        eprintln!("skipped {}: {why}", path.display());
    }
    println!(
        "files {} kept {} too_large {} too_long {} rejected {} fragments {} vocab {}",
        report.files,
        report.kept,
        report.too_large,
        report.too_long,
        report.rejected.len(),
        report.fragments,
        report.vocab_size
    );
    Ok(EXIT_OK)
}

fn cmd_train(a: TrainArgs) -> anyhow::Result<i32> {
    let hp = Hyperparams {
        embed_dim: a.embed_dim,
        hidden_dim: a.hidden_dim,
        type_embed_dim: a.type_embed_dim,
        learning_rate: a.learning_rate,
        lr_decay: a.lr_decay,
        momentum: a.momentum,
        l2_penalty: a.l2_penalty,
        batch_size: a.batch_size,
        bptt_cap: a.bptt,
        grad_clip_norm: a.clip,
        epochs: a.epochs,
        rng_seed: a.seed,
    };
    let store = Store::load(&a.store)?;
    let mut model = init_model(&hp, &store.vocab)?;
    for epoch in 1..=hp.epochs {
        let s = train_epoch(&mut model, &store.vocab, &store.sequences, &hp)
            .with_context(|| format!("epoch {epoch}"))?;
        println!(
            "epoch {epoch} l1 {:.6} l2 {:.6} perplexity {:.4} lr {:.6}",
            s.mean_l1,
            s.mean_l2,
            s.mean_l1.exp(),
            s.learning_rate
        );
    }
    let out = a.out.unwrap_or_else(|| a.store.join(CHECKPOINT_FILE));
    checkpoint::save(&out, &model, &store::vocab_hash(&store.vocab))?;
    println!("wrote {}", out.display());
    Ok(EXIT_OK)
}

fn seed_asts(store: &Store) -> (Vec<String>, Vec<AstNode>) {
    store.seeds.iter().cloned().unzip()
}

fn cmd_generate(a: GenerateArgs) -> anyhow::Result<i32> {
    let store = Store::load(&a.store)?;
    let g = &a.generation;
    let ckpt = a.checkpoint.clone().unwrap_or_else(|| a.store.join(CHECKPOINT_FILE));
    let loaded = LoadedSuggester::load(g.suggester, &a.store, &store.vocab, Some(&ckpt))?;
    let suggester = loaded.suggester();
    let builtins = registry::load_builtins(&g.builtins)?;
    let hints = registry::load_usage_hints(g.usage_hints.as_deref())?;
    let params = GenerationParams::new(g.f_max, g.k_top);
    params.validate()?;
    let (_, seeds) = seed_asts(&store);
    let generator = Generator {
        seeds: &seeds,
        vocab: &store.vocab,
        suggester: &*suggester,
        params,
        resolve: (!g.no_resolve).then_some((&builtins, &hints)),
        rng_seed: a.seed,
    };
    fs::create_dir_all(&a.out).with_context(|| a.out.display().to_string())?;
    let mut failed = 0u64;
    for i in 0..a.count {
        match generator.generate(i) {
            Ok(t) => {
                let path = a.out.join(format!("test_{i:06}.js"));
                fs::write(&path, &t.source).with_context(|| path.display().to_string())?;
            }
            Err(f) => {
                failed += 1;
                eprintln!("test {i}: generation failed ({f:?})");
            }
        }
    }
    println!("generated {} failed {failed}", a.count - failed);
    Ok(EXIT_OK)
}

fn cmd_fuzz(a: FuzzArgs) -> anyhow::Result<i32> {
    let cfg = CampaignConfig::load(&a.config)?;
    let store = Store::load(&cfg.store)?;
    let ckpt = cfg.checkpoint.clone().unwrap_or_else(|| cfg.store.join(CHECKPOINT_FILE));
    let loaded = LoadedSuggester::load(cfg.suggester, &cfg.store, &store.vocab, Some(&ckpt))?;
    let suggester = loaded.suggester();
    let builtins = registry::load_builtins(&cfg.builtins)?;
    let hints = registry::load_usage_hints(cfg.usage_hints.as_deref())?;
    let params = GenerationParams::new(cfg.gen.f_max, cfg.gen.k_top);
    params.validate()?;
    let (names, seeds) = seed_asts(&store);
    let campaign = Campaign {
        generator: Generator {
            seeds: &seeds,
            vocab: &store.vocab,
            suggester: &*suggester,
            params,
            resolve: cfg.resolve.then_some((&builtins, &hints)),
            rng_seed: cfg.rng_seed,
        },
        seed_names: &names,
        engine: &cfg.engine,
        workers: cfg.workers,
        budget: cfg.budget,
        out: &cfg.out,
    };
    let stop = Arc::new(AtomicBool::new(false));
    let flag = stop.clone();
    // Only one handler per process; a second campaign in-process keeps the first.
    let _ = ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst));
    let stats = harness::run_campaign(&campaign, &stop)?;
    print_stats(&stats);
    Ok(EXIT_OK)
}

fn print_stats(s: &harness::CampaignStats) {
    println!(
        "executed {} pass {} runtime_error {} crash {} timeout {} other {} unique_crashes {}",
        s.executed, s.pass, s.runtime_error, s.crash, s.timeout, s.other, s.unique_crashes
    );
    println!(
        "pass_rate {:.4} generation_failures {} elapsed {:.1}s throughput {:.2}/s stopped {}",
        s.pass_rate, s.generation_failures, s.elapsed_secs, s.tests_per_sec, s.stopped
    );
    for (name, n) in &s.runtime_errors {
        println!("  {name} {n}");
    }
}

fn cmd_stats(a: StatsArgs) -> anyhow::Result<i32> {
    let stats = harness::read_stats(&a.campaign)?;
    print_stats(&stats);
    let crashes = a.campaign.join(harness::CRASHES_DIR);
    if crashes.is_dir() {
        let mut dirs: Vec<PathBuf> = fs::read_dir(&crashes)?.filter_map(|e| e.ok().map(|e| e.path())).collect();
        dirs.sort();
        for d in dirs {
            let (r, _) = harness::load_crash(&d)?;
            println!("crash {} signal {} hits {} seed {} test {}", r.key, r.signal, r.hits, r.seed, r.test_index);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_replay(a: ReplayArgs) -> anyhow::Result<i32> {
    let engine = match (&a.config, &a.engine) {
        (Some(c), _) => CampaignConfig::load(c)?.engine,
        (None, Some(b)) => EngineConfig::new(b),
        (None, None) => unreachable!("clap requires one engine source"),
    };
    engine.validate()?;
    let (record, source) = harness::load_crash(&a.crash)?;
    let scratch = tempfile::tempdir()?;
    let outcome = harness::execute(&engine, &source, scratch.path())?;
    let class = harness::classify(&outcome, &engine.error_matcher()?);
    let reproduced = match class {
        Classification::Crash(_) => {
            let key = harness::dedup_key(&outcome, &engine, &scratch.path().join("test.js")).key;
            println!("class crash key {key}");
            key == record.key
        }
        ref other => {
            println!("class {}", other.label());
            false
        }
    };
    println!("reproduced {}", if reproduced { "yes" } else { "no" });
    Ok(if reproduced { EXIT_OK } else { EXIT_FAILURE })
}
