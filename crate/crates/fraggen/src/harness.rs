//! Running tests against an engine binary, classifying outcomes,
//! deduplicating crashes and driving fuzzing campaigns.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{BufWriter, Read, Write};
use std::os::unix::process::{CommandExt, ExitStatusExt};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Condvar, Mutex};
use std::thread;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use dashmap::mapref::entry::Entry;
use dashmap::DashMap;
use regex::Regex;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};
use wait_timeout::ChildExt;

use crate::error::{Error, Result};
use crate::pipeline::{Generator, SuggesterKind};

pub const DEFAULT_TIMEOUT_SECS: f64 = 5.0;
/// Captured stderr is cut at this many bytes.
pub const STDERR_LIMIT: usize = 64 * 1024;
/// Argument placeholder replaced by the test file path. Without one, the
/// path is appended.
pub const TEST_PLACEHOLDER: &str = "{test}";
/// The runtime error classes counted as errors by default.
pub const STANDARD_ERRORS: [&str; 5] = ["SyntaxError", "TypeError", "RangeError", "ReferenceError", "URIError"];

fn default_timeout() -> f64 {
    DEFAULT_TIMEOUT_SECS
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EngineConfig {
    pub binary: PathBuf,
    #[serde(default)]
    pub args: Vec<String>,
    #[serde(default = "default_timeout")]
    pub timeout_secs: f64,
    #[serde(default)]
    pub env: BTreeMap<String, String>,
    /// Replaces [`STANDARD_ERRORS`] as the runtime error names.
    #[serde(default)]
    pub error_names: Option<Vec<String>>,
    /// Shell command printing the top stack frame of a crash. It reads the
    /// crash stderr on stdin and finds the test in `$FRAGGEN_TEST`.
    #[serde(default)]
    pub extractor: Option<String>,
}

impl EngineConfig {
    pub fn new(binary: impl Into<PathBuf>) -> Self {
        EngineConfig {
            binary: binary.into(),
            args: Vec::new(),
            timeout_secs: DEFAULT_TIMEOUT_SECS,
            env: BTreeMap::new(),
            error_names: None,
            extractor: None,
        }
    }

    pub fn timeout(&self) -> Duration {
        Duration::from_secs_f64(self.timeout_secs.max(0.0))
    }

    /// Full path of the binary, searching `PATH` for bare names.
    pub fn resolve_binary(&self) -> Result<PathBuf> {
        let unavailable = || Error::EngineUnavailable(format!("{} is not an executable file", self.binary.display()));
        let candidates: Vec<PathBuf> = if self.binary.components().count() > 1 {
            vec![self.binary.clone()]
        } else {
            std::env::var_os("PATH")
                .map(|p| std::env::split_paths(&p).map(|d| d.join(&self.binary)).collect())
                .unwrap_or_default()
        };
        candidates.into_iter().find(|p| is_executable(p)).ok_or_else(unavailable)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.timeout_secs > 0.0 && self.timeout_secs.is_finite()) {
            return Err(Error::Format("engine timeout must be positive".into()));
        }
        self.error_matcher()?;
        self.resolve_binary().map(|_| ())
    }

    pub fn error_matcher(&self) -> Result<ErrorMatcher> {
        match &self.error_names {
            Some(names) => ErrorMatcher::new(names),
            None => Ok(ErrorMatcher::standard()),
        }
    }

    fn argv(&self, test: &Path) -> Vec<OsString> {
        let mut out: Vec<OsString> = Vec::with_capacity(self.args.len() + 1);
        let mut placed = false;
        for a in &self.args {
            if a.contains(TEST_PLACEHOLDER) {
                placed = true;
                out.push(a.replace(TEST_PLACEHOLDER, &test.to_string_lossy()).into());
            } else {
                out.push(a.into());
            }
        }
        if !placed {
            out.push(test.into());
        }
        out
    }
}

fn is_executable(p: &Path) -> bool {
    use std::os::unix::fs::PermissionsExt;
    fs::metadata(p).map(|m| m.is_file() && m.permissions().mode() & 0o111 != 0).unwrap_or(false)
}

/// Finds the runtime error name reported on stderr.
#[derive(Debug, Clone)]
pub struct ErrorMatcher(Regex);

impl ErrorMatcher {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Format("error name list is empty".into()));
        }
        let alts: Vec<String> = names.iter().map(|n| regex::escape(n.as_ref())).collect();
        let re = Regex::new(&format!(r"(?m)^\s*(?:Uncaught\s+)?({})\b", alts.join("|")))
            .map_err(|e| Error::Format(e.to_string()))?;
        Ok(ErrorMatcher(re))
    }

    pub fn standard() -> Self {
        ErrorMatcher::new(&STANDARD_ERRORS).expect("static pattern")
    }

    pub fn find(&self, stderr: &str) -> Option<String> {
        self.0.captures(stderr).map(|c| c[1].to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Exit(i32),
    Signal(i32),
    Timeout,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExecutionOutcome {
    pub termination: Termination,
    pub stderr: String,
    pub stderr_truncated: bool,
    pub wall: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Pass,
    RuntimeError(String),
    Crash(i32),
    Timeout,
    Other,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Pass => "pass",
            Classification::RuntimeError(_) => "runtime_error",
            Classification::Crash(_) => "crash",
            Classification::Timeout => "timeout",
            Classification::Other => "other",
        }
    }
}

pub fn signal_name(sig: i32) -> String {
    let name = match sig {
        libc::SIGHUP => "SIGHUP",
        libc::SIGINT => "SIGINT",
        libc::SIGQUIT => "SIGQUIT",
        libc::SIGILL => "SIGILL",
        libc::SIGTRAP => "SIGTRAP",
        libc::SIGABRT => "SIGABRT",
        libc::SIGBUS => "SIGBUS",
        libc::SIGFPE => "SIGFPE",
        libc::SIGKILL => "SIGKILL",
        libc::SIGSEGV => "SIGSEGV",
        libc::SIGPIPE => "SIGPIPE",
        libc::SIGALRM => "SIGALRM",
        libc::SIGTERM => "SIGTERM",
        _ => return format!("SIG{sig}"),
    };
    name.to_string()
}

/// Writes `source` to `scratch/test.js` and runs the engine on it.
pub fn execute(cfg: &EngineConfig, source: &str, scratch: &Path) -> Result<ExecutionOutcome> {
    let path = scratch.join("test.js");
    fs::write(&path, source).map_err(|e| Error::io(&path, e))?;
    execute_file(cfg, &path)
}

/// Runs the engine in its own process group so a timeout kills everything
/// it started.
pub fn execute_file(cfg: &EngineConfig, test: &Path) -> Result<ExecutionOutcome> {
    let start = Instant::now();
    let mut child = Command::new(&cfg.binary)
        .args(cfg.argv(test))
        .envs(&cfg.env)
        .stdin(Stdio::null())
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .process_group(0)
        .spawn()
        .map_err(|e| Error::EngineUnavailable(format!("{}: {e}", cfg.binary.display())))?;
    let mut pipe = child.stderr.take().expect("piped stderr");
    let reader = thread::spawn(move || {
        let mut buf = Vec::new();
        let mut chunk = [0u8; 8192];
        let mut truncated = false;
        while let Ok(n @ 1..) = pipe.read(&mut chunk) {
            let room = STDERR_LIMIT - buf.len();
            truncated |= n > room;
            buf.extend_from_slice(&chunk[..n.min(room)]);
        }
        (buf, truncated)
    });
    let pid = child.id() as libc::pid_t;
    let status = child.wait_timeout(cfg.timeout()).map_err(|e| Error::io(&cfg.binary, e))?;
    let termination = match status {
        Some(s) => match (s.code(), s.signal()) {
            (Some(c), _) => Termination::Exit(c),
            (None, Some(sig)) => Termination::Signal(sig),
            (None, None) => Termination::Exit(-1),
        },
        None => {
            // SAFETY: pid is our child's process group id; killpg has no memory effects.
            unsafe { libc::killpg(pid, libc::SIGKILL) };
            let _ = child.kill();
            let _ = child.wait();
            Termination::Timeout
        }
    };
    if status.is_some() {
        // Stragglers left in the group would keep stderr open.
        // SAFETY: as above.
        unsafe { libc::killpg(pid, libc::SIGKILL) };
    }
    let (buf, stderr_truncated) = reader.join().unwrap_or_default();
    Ok(ExecutionOutcome {
        termination,
        stderr: String::from_utf8_lossy(&buf).into_owned(),
        stderr_truncated,
        wall: start.elapsed(),
    })
}

pub fn classify(outcome: &ExecutionOutcome, errors: &ErrorMatcher) -> Classification {
    match outcome.termination {
        Termination::Signal(s) if s == libc::SIGSEGV || s == libc::SIGILL => Classification::Crash(s),
        Termination::Signal(_) => Classification::Other,
        Termination::Timeout => Classification::Timeout,
        Termination::Exit(0) => Classification::Pass,
        Termination::Exit(_) => match errors.find(&outcome.stderr) {
            Some(name) => Classification::RuntimeError(name),
            None => Classification::Other,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedupKey {
    pub key: String,
    /// Top frame reported by the extractor, when it succeeded.
    pub frame: Option<String>,
}

fn short_hash(text: &str) -> String {
    Sha256::digest(text.as_bytes())[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// `SIG<name>-<hash>` over the extractor's top frame, or over the last
/// non-empty stderr line when there is no extractor or it fails.
pub fn dedup_key(outcome: &ExecutionOutcome, cfg: &EngineConfig, test: &Path) -> DedupKey {
    let sig = match outcome.termination {
        Termination::Signal(s) => signal_name(s),
        Termination::Exit(c) => format!("EXIT{c}"),
        Termination::Timeout => "TIMEOUT".into(),
    };
    if let Some(frame) = cfg.extractor.as_deref().and_then(|cmd| run_extractor(cmd, &outcome.stderr, test, cfg.timeout())) {
        return DedupKey { key: format!("{sig}-{}", short_hash(&frame)), frame: Some(frame) };
    }
    let last = outcome.stderr.lines().rev().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    DedupKey { key: format!("{sig}-{}", short_hash(last)), frame: None }
}

fn run_extractor(cmd: &str, stderr: &str, test: &Path, timeout: Duration) -> Option<String> {
    let mut child = Command::new("sh")
        .arg("-c")
        .arg(cmd)
        .env("FRAGGEN_TEST", test)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .ok()?;
    let mut stdin = child.stdin.take()?;
    let input = stderr.as_bytes().to_vec();
    let writer = thread::spawn(move || {
        let _ = stdin.write_all(&input);
    });
    let mut out = child.stdout.take()?;
    let reader = thread::spawn(move || {
        let mut s = String::new();
        let _ = out.read_to_string(&mut s);
        s
    });
    let status = match child.wait_timeout(timeout).ok()? {
        Some(s) => s,
        None => {
            let _ = child.kill();
            let _ = child.wait();
            return None;
        }
    };
    let _ = writer.join();
    let text = reader.join().ok()?;
    if !status.success() {
        return None;
    }
    text.lines().map(str::trim).find(|l| !l.is_empty()).map(String::from)
}

/// Fraction of `tests` the engine runs with exit status 0.
pub fn pass_rate(cfg: &EngineConfig, tests: &[String]) -> Result<f64> {
    if tests.is_empty() {
        return Err(Error::Format("pass rate of an empty test list".into()));
    }
    let scratch = tempfile::tempdir().map_err(|e| Error::io(std::env::temp_dir(), e))?;
    let errors = cfg.error_matcher()?;
    let mut pass = 0usize;
    for t in tests {
        if classify(&execute(cfg, t, scratch.path())?, &errors) == Classification::Pass {
            pass += 1;
        }
    }
    Ok(pass as f64 / tests.len() as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrashRecord {
    pub key: String,
    pub signal: String,
    #[serde(default)]
    pub frame: Option<String>,
    pub seed: String,
    pub test_index: u64,
    pub rng_seed: u64,
    /// Seconds since the Unix epoch.
    pub first_seen: f64,
    pub hits: u64,
}

pub const CRASHES_DIR: &str = "crashes";

/// Crash records keyed by dedup key, mirrored to `crashes/<key>/`.
pub struct CrashStore {
    dir: PathBuf,
    records: DashMap<String, CrashRecord>,
}

impl CrashStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CrashStore { dir: dir.into(), records: DashMap::new() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Inserts a new record with its files, or bumps the hit count of the
    /// existing one. Returns whether the key was new.
    pub fn record(&self, record: CrashRecord, source: &str, stderr: &str) -> Result<bool> {
        match self.records.entry(record.key.clone()) {
            Entry::Occupied(mut e) => {
                e.get_mut().hits += 1;
                Ok(false)
            }
            Entry::Vacant(e) => {
                let dir = self.dir.join(&record.key);
                fs::create_dir_all(&dir).map_err(|err| Error::io(&dir, err))?;
                write_file(&dir.join("test.js"), source.as_bytes())?;
                write_file(&dir.join("stderr.txt"), stderr.as_bytes())?;
                write_file(&dir.join("meta.json"), &serde_json::to_vec_pretty(&record)?)?;
                e.insert(record);
                Ok(true)
            }
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> Vec<CrashRecord> {
        let mut out: Vec<CrashRecord> = self.records.iter().map(|r| r.value().clone()).collect();
        out.sort_by(|a, b| a.key.cmp(&b.key));
        out
    }

    /// Rewrites every `meta.json` with the current hit counts.
    pub fn flush(&self) -> Result<()> {
        for r in self.records() {
            write_file(&self.dir.join(&r.key).join("meta.json"), &serde_json::to_vec_pretty(&r)?)?;
        }
        Ok(())
    }
}

/// Reads `meta.json` and `test.js` of a stored crash.
pub fn load_crash(dir: &Path) -> Result<(CrashRecord, String)> {
    let meta = dir.join("meta.json");
    let record = serde_json::from_slice(&fs::read(&meta).map_err(|e| Error::io(&meta, e))?)?;
    let test = dir.join("test.js");
    let source = fs::read_to_string(&test).map_err(|e| Error::io(&test, e))?;
    Ok((record, source))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

fn now_secs() -> f64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs_f64()).unwrap_or(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budget {
    /// Number of tests to execute.
    #[serde(default)]
    pub tests: Option<u64>,
    #[serde(default)]
    pub seconds: Option<f64>,
}

fn default_f_max() -> usize {
    fraggen_core::generate::GenerationParams::default().f_max
}

fn default_k_top() -> usize {
    fraggen_core::generate::GenerationParams::default().k_top
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenParams {
    #[serde(default = "default_f_max")]
    pub f_max: usize,
    #[serde(default = "default_k_top")]
    pub k_top: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { f_max: default_f_max(), k_top: default_k_top() }
    }
}

fn yes() -> bool {
    true
}

fn one() -> usize {
    1
}

fn default_builtins() -> String {
    "node".into()
}

/// Campaign config file. Relative paths are taken from the file's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    pub engine: EngineConfig,
    /// Fragment store written by `ingest`; its `seeds/` are mutated.
    pub store: PathBuf,
    #[serde(default)]
    pub checkpoint: Option<PathBuf>,
    #[serde(default)]
    pub suggester: SuggesterKind,
    #[serde(default)]
    pub gen: GenParams,
    #[serde(default = "yes")]
    pub resolve: bool,
    #[serde(default = "one")]
    pub workers: usize,
    pub budget: Budget,
    #[serde(default)]
    pub rng_seed: u64,
    /// Campaign output directory.
    pub out: PathBuf,
    /// Bundled engine name or registry file.
    #[serde(default = "default_builtins")]
    pub builtins: String,
    #[serde(default)]
    pub usage_hints: Option<PathBuf>,
}

impl CampaignConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg: CampaignConfig = serde_json::from_str(&text)?;
        let base = path.parent().unwrap_or(Path::new("."));
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        fix(&mut cfg.store);
        fix(&mut cfg.out);
        if let Some(c) = cfg.checkpoint.as_mut() {
            fix(c);
        }
        if let Some(h) = cfg.usage_hints.as_mut() {
            fix(h);
        }
        if cfg.engine.binary.components().count() > 1 {
            fix(&mut cfg.engine.binary);
        }
        if !crate::registry::ENGINES.contains(&cfg.builtins.as_str()) && Path::new(&cfg.builtins).is_relative() {
            cfg.builtins = base.join(&cfg.builtins).to_string_lossy().into_owned();
        }
        Ok(cfg)
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CampaignStats {
    pub generated: u64,
    pub generation_failures: u64,
    pub executed: u64,
    pub pass: u64,
    pub runtime_error: u64,
    pub crash: u64,
    pub timeout: u64,
    pub other: u64,
    pub unique_crashes: u64,
    pub runtime_errors: BTreeMap<String, u64>,
    pub elapsed_secs: f64,
    pub tests_per_sec: f64,
    pub pass_rate: f64,
    /// `budget`, `interrupted` or `engine_unavailable`.
    pub stopped: String,
    #[serde(default)]
    pub error: Option<String>,
}

impl CampaignStats {
    fn merge(&mut self, o: &CampaignStats) {
        self.generated += o.generated;
        self.generation_failures += o.generation_failures;
        self.executed += o.executed;
        self.pass += o.pass;
        self.runtime_error += o.runtime_error;
        self.crash += o.crash;
        self.timeout += o.timeout;
        self.other += o.other;
        for (k, v) in &o.runtime_errors {
            *self.runtime_errors.entry(k.clone()).or_default() += v;
        }
    }

    fn count(&mut self, class: &Classification) {
        self.executed += 1;
        match class {
            Classification::Pass => self.pass += 1,
            Classification::RuntimeError(name) => {
                self.runtime_error += 1;
                *self.runtime_errors.entry(name.clone()).or_default() += 1;
            }
            Classification::Crash(_) => self.crash += 1,
            Classification::Timeout => self.timeout += 1,
            Classification::Other => self.other += 1,
        }
    }
}

pub const STATS_FILE: &str = "stats.json";
pub const EVENTS_FILE: &str = "events.jsonl";
/// Worker counters are merged into the shared totals this often.
const MERGE_EVERY: u64 = 32;

pub struct Campaign<'a> {
    pub generator: Generator<'a>,
    pub seed_names: &'a [String],
    pub engine: &'a EngineConfig,
    pub workers: usize,
    pub budget: Budget,
    pub out: &'a Path,
}

/// Ranks successful slots in slot order, whatever order workers finish
/// generating in, so the same tests run for any number of workers.
#[derive(Default)]
struct SlotOrder {
    /// Outcomes of slots at or past `frontier`.
    pending: BTreeMap<u64, bool>,
    /// Rank among successful slots, for slots behind `frontier` not yet
    /// collected.
    ranks: BTreeMap<u64, u64>,
    frontier: u64,
    successes: u64,
}

impl SlotOrder {
    fn resolve(&mut self, slot: u64, ok: bool) {
        self.pending.insert(slot, ok);
        while let Some(ok) = self.pending.remove(&self.frontier) {
            if ok {
                self.ranks.insert(self.frontier, self.successes);
                self.successes += 1;
            }
            self.frontier += 1;
        }
    }
}

struct Shared<'a> {
    campaign: &'a Campaign<'a>,
    errors: ErrorMatcher,
    crashes: CrashStore,
    next: AtomicU64,
    budget_tests: u64,
    order: Mutex<SlotOrder>,
    order_cv: Condvar,
    max_slots: u64,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    events: Mutex<BufWriter<fs::File>>,
    totals: Mutex<CampaignStats>,
    failure: Mutex<Option<Error>>,
}

/// Runs a campaign until the budget is spent or `stop` is raised. Tests
/// are numbered; test `i` is generated from its own random stream. A slot
/// whose generation fails is skipped without spending budget, and at most
/// twice the test budget of slots is tried. The test budget goes to the
/// first successful slots in slot order.
pub fn run_campaign(c: &Campaign<'_>, stop: &AtomicBool) -> Result<CampaignStats> {
    if c.budget.tests.is_none() && c.budget.seconds.is_none() {
        return Err(Error::Format("campaign budget needs `tests` or `seconds`".into()));
    }
    c.engine.validate()?;
    fs::create_dir_all(c.out).map_err(|e| Error::io(c.out, e))?;
    let events_path = c.out.join(EVENTS_FILE);
    let events = fs::File::create(&events_path).map_err(|e| Error::io(&events_path, e))?;
    let start = Instant::now();
    let shared = Shared {
        campaign: c,
        errors: c.engine.error_matcher()?,
        crashes: CrashStore::new(c.out.join(CRASHES_DIR)),
        next: AtomicU64::new(0),
        budget_tests: c.budget.tests.unwrap_or(u64::MAX),
        order: Mutex::new(SlotOrder::default()),
        order_cv: Condvar::new(),
        max_slots: c.budget.tests.map(|n| n.saturating_mul(2).max(1)).unwrap_or(u64::MAX),
        deadline: c.budget.seconds.map(|s| start + Duration::from_secs_f64(s.max(0.0))),
        stop,
        events: Mutex::new(BufWriter::new(events)),
        totals: Mutex::new(CampaignStats::default()),
        failure: Mutex::new(None),
    };
    thread::scope(|s| {
        for w in 0..c.workers.max(1) {
            let shared = &shared;
            s.spawn(move || worker(shared, w));
        }
    });

    let failure = shared.failure.lock().unwrap_or_else(|e| e.into_inner()).take();
    let mut stats = shared.totals.into_inner().unwrap_or_else(|e| e.into_inner());
    shared.events.into_inner().unwrap_or_else(|e| e.into_inner()).flush().map_err(|e| Error::io(&events_path, e))?;
    shared.crashes.flush()?;
    stats.unique_crashes = shared.crashes.len() as u64;
    stats.elapsed_secs = start.elapsed().as_secs_f64();
    stats.tests_per_sec = if stats.elapsed_secs > 0.0 { stats.executed as f64 / stats.elapsed_secs } else { 0.0 };
    stats.pass_rate = if stats.executed > 0 { stats.pass as f64 / stats.executed as f64 } else { 0.0 };
    stats.stopped = match (&failure, stop.load(Ordering::SeqCst)) {
        (Some(_), _) => "engine_unavailable",
        (None, true) => "interrupted",
        (None, false) => "budget",
    }
    .into();
    stats.error = failure.as_ref().map(|e| e.to_string());
    write_stats(c.out, &stats)?;
    match failure {
        Some(e) => Err(e),
        None => Ok(stats),
    }
}

pub fn write_stats(out: &Path, stats: &CampaignStats) -> Result<()> {
    write_file(&out.join(STATS_FILE), &serde_json::to_vec_pretty(stats)?)
}

pub fn read_stats(out: &Path) -> Result<CampaignStats> {
    let path = out.join(STATS_FILE);
    Ok(serde_json::from_slice(&fs::read(&path).map_err(|e| Error::io(&path, e))?)?)
}

fn worker(sh: &Shared<'_>, id: usize) {
    let c = sh.campaign;
    let mut local = CampaignStats::default();
    let scratch = match tempfile::Builder::new().prefix(&format!("worker{id}-")).tempdir_in(c.out) {
        Ok(d) => d,
        Err(e) => {
            fail(sh, Error::io(c.out, e));
            return;
        }
    };
    let flush = |local: &mut CampaignStats| {
        sh.totals.lock().unwrap_or_else(|e| e.into_inner()).merge(local);
        *local = CampaignStats::default();
    };
    let mut since_merge = 0u64;
    loop {
        if sh.stop.load(Ordering::SeqCst) || sh.deadline.is_some_and(|d| Instant::now() >= d) {
            break;
        }
        let i = sh.next.fetch_add(1, Ordering::SeqCst);
        if i >= sh.max_slots {
            break;
        }
        let generated = c.generator.generate(i);
        let rank = slot_rank(sh, i, generated.is_ok());
        let test = match generated {
            Ok(t) => t,
            Err(f) => {
                local.generation_failures += 1;
                event(sh, json!({ "test": i, "worker": id, "class": "generation_failed", "detail": format!("{f:?}") }));
                continue;
            }
        };
        match rank {
            Some(r) if r < sh.budget_tests => {}
            _ => break,
        }
        local.generated += 1;
        let outcome = match execute(c.engine, &test.source, scratch.path()) {
            Ok(o) => o,
            Err(e) => {
                fail(sh, e);
                break;
            }
        };
        let class = classify(&outcome, &sh.errors);
        local.count(&class);
        let seed_name = c.seed_names.get(test.seed).cloned().unwrap_or_else(|| test.seed.to_string());
        let mut key = None;
        let detail = match &class {
            Classification::RuntimeError(name) => Some(name.clone()),
            Classification::Crash(sig) => {
                let dk = dedup_key(&outcome, c.engine, &scratch.path().join("test.js"));
                let record = CrashRecord {
                    key: dk.key.clone(),
                    signal: signal_name(*sig),
                    frame: dk.frame,
                    seed: seed_name.clone(),
                    test_index: i,
                    rng_seed: c.generator.rng_seed,
                    first_seen: now_secs(),
                    hits: 1,
                };
                if let Err(e) = sh.crashes.record(record, &test.source, &outcome.stderr) {
                    fail(sh, e);
                    break;
                }
                key = Some(dk.key);
                Some(signal_name(*sig))
            }
            Classification::Other => match outcome.termination {
                Termination::Signal(s) => Some(signal_name(s)),
                Termination::Exit(code) => Some(format!("exit {code}")),
                Termination::Timeout => None,
            },
            _ => None,
        };
        event(
            sh,
            json!({
                "test": i,
                "worker": id,
                "seed": seed_name,
                "class": class.label(),
                "detail": detail,
                "key": key,
                "wall_ms": outcome.wall.as_secs_f64() * 1e3,
                "attempts": test.attempts,
            }),
        );
        since_merge += 1;
        if since_merge >= MERGE_EVERY {
            since_merge = 0;
            flush(&mut local);
        }
    }
    flush(&mut local);
}

/// Records the outcome of slot `i` and, for a success, waits until every
/// earlier slot is settled to learn its rank. `None` when stopped first.
fn slot_rank(sh: &Shared<'_>, i: u64, ok: bool) -> Option<u64> {
    let mut order = sh.order.lock().unwrap_or_else(|e| e.into_inner());
    order.resolve(i, ok);
    sh.order_cv.notify_all();
    if !ok {
        return None;
    }
    loop {
        if let Some(r) = order.ranks.remove(&i) {
            return Some(r);
        }
        if sh.stop.load(Ordering::SeqCst) {
            return None;
        }
        order = sh.order_cv.wait_timeout(order, Duration::from_millis(50)).unwrap_or_else(|e| e.into_inner()).0;
    }
}

fn event(sh: &Shared<'_>, value: serde_json::Value) {
    let mut w = sh.events.lock().unwrap_or_else(|e| e.into_inner());
    let _ = serde_json::to_writer(&mut *w, &value);
    let _ = w.write_all(b"\n");
}

fn fail(sh: &Shared<'_>, e: Error) {
    sh.stop.store(true, Ordering::SeqCst);
    sh.failure.lock().unwrap_or_else(|p| p.into_inner()).get_or_insert(e);
}
